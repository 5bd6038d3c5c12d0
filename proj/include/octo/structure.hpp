#pragma once

#include "octo/forms.hpp"
#include "octo/octonion.hpp"

#include <optional>
#include <string>
#include <utility>

namespace octo {

/// Finite-dimensional unital algebra given by structure constants plus its
/// quadratic form data: N on basis vectors and the Gram matrix of the
/// associated bilinear form.  N extends to arbitrary elements by
/// N(sum x_i b_i) = sum x_i^2 N(b_i) + sum_{i<j} x_i x_j <b_i, b_j>.
struct StructureAlgebra {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> table; // table[i][j] = coords of b_i * b_j
    std::vector<Scalar> basis_norms;
    Mat gram;
    Vec unit;

    std::size_t dim() const { return basis.size(); }
    Vec mul(const Vec& x, const Vec& y) const;
    Scalar norm(const Vec& x) const;
    Scalar bilinear_form(const Vec& x, const Vec& y) const;
    /// conj(x) = <x,e> e - x.
    Vec conj(const Vec& x) const;

    /// Witnesses are basis indices of a failing pair/triple.
    bool is_commutative(std::pair<std::size_t, std::size_t>* witness = nullptr) const;
    bool is_associative(std::array<std::size_t, 3>* witness = nullptr) const;
};

StructureAlgebra ground_field_algebra(const FieldSpec& field); // k*e
StructureAlgebra split_quaternion_algebra(const FieldSpec& field); // M_2(k)
StructureAlgebra octonion_structure(const FieldSpec& field); // the concrete pair algebra

/// Cayley-Dickson step D -> D + Da with N(x + ya) = N(x) - alpha N(y).
/// Requires dim in {1,2,4}, an associative input, and alpha != 0.
StructureAlgebra double_algebra(const StructureAlgebra& d, const Scalar& alpha);

struct CompositionCertificate {
    bool ok = true;
    std::string failed_law; // "unit", "polarization", "nondegenerate", "composition"
    std::optional<std::pair<Vec, Vec>> witness;
};

/// Unit laws, Gram/norm consistency, nondegeneracy, and N(xy) = N(x)N(y) on
/// all basis pairs plus 50 deterministic pseudo-random linear combinations.
CompositionCertificate is_composition_algebra(const StructureAlgebra& a);

/// Subspace of the concrete octonion algebra spanned by `vectors`
/// (ambient coordinates in basis B), expected closed under multiplication.
struct SubalgebraBasis {
    FieldSpec field;
    std::vector<Vec> vectors;

    std::size_t dim() const { return vectors.size(); }
};

bool subalgebra_is_closed(const SubalgebraBasis& d,
                          std::pair<std::size_t, std::size_t>* witness = nullptr);
bool subalgebra_contains_identity(const SubalgebraBasis& d);

/// Structure constants of the subalgebra in its own basis.
StructureAlgebra subalgebra_structure(const SubalgebraBasis& d);

/// Exact basis of D-perp inside the octonion algebra.
std::vector<Vec> orthogonal_complement(const SubalgebraBasis& d);

/// Exact basis of the orthogonal complement of span(vectors) inside a
/// structure algebra (vectors in algebra coordinates).  Errors if the
/// ambient Gram matrix is degenerate.
std::vector<Vec> orthogonal_complement_in(const StructureAlgebra& ambient,
                                          const std::vector<Vec>& vectors);

/// First vector with nonzero octonion norm among singles, pairwise sums and
/// the full sum of the given ambient-coordinate vectors, in index order.
std::optional<Vec> first_anisotropic_combination(const FieldSpec& field,
                                                 const std::vector<Vec>& vectors);

/// Deterministic orthogonal anisotropic frame of a quaternion subalgebra:
/// pure a then pure b with b orthogonal to a, each found by scanning the
/// reduced pure basis (singles, then pairwise sums, then the triple sum, in
/// index order).  alpha = -N(a), beta = -N(b).
struct PureFrame {
    Vec a, b;
    Scalar alpha, beta;
};
PureFrame pure_anisotropic_frame(const SubalgebraBasis& d);

/// Zero-divisor pair (u, w) with u*w = 0 and u, w != 0, or nullopt when the
/// restricted norm form is anisotropic.  F_p: exhaustive projective search.
/// Characteristic 0: split/division is decided by symbols; in the split case
/// the witness comes from a square-root shortcut or a bounded rational conic
/// search (an error is raised if a split algebra admits no rational-
/// coordinate zero divisor, which cannot happen for the algebras the
/// classification pipeline produces).
std::optional<std::pair<Vec, Vec>> find_zero_divisor(const SubalgebraBasis& d);

} // namespace octo
