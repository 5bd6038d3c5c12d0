#pragma once

#include "octo/linalg.hpp"
#include "octo/structure.hpp"

#include <optional>

namespace octo {

/// Exact 8x8 linear map on the octonion basis B.  The automorphism flag is
/// only set by constructors that actually ran the verification scan.
struct LinearMap {
    FieldSpec field;
    Mat matrix; // 8x8
    bool verified_automorphism = false;

    static LinearMap from_matrix(const FieldSpec& field, Mat m);
    Vec apply(const Vec& v) const { return mat_apply(matrix, v); }
    bool operator==(const LinearMap& o) const { return mat_equal(matrix, o.matrix); }
    bool operator!=(const LinearMap& o) const { return !(*this == o); }
};

/// Diagonal torus parameters; the induced map is
/// diag(1, bg, (bg)^-1, 1, g^-1, b, b^-1, g) in basis B.
struct TorusElement {
    Scalar beta, gamma;
};

LinearMap identity_map(const FieldSpec& field);

/// Verified automorphism for nonzero beta, gamma.
LinearMap torus_element(const FieldSpec& field, const Scalar& beta, const Scalar& gamma);

/// The order-2 block anti-diagonal automorphism that inverts the diagonal
/// torus (s t s^-1 = t^-1 for every torus element t).
LinearMap s_element(const FieldSpec& field);

/// The automorphism s * t_(1, 1/p) fixing the quaternion algebra with
/// presentation (-1, p) elementwise; for p = 3 mod 4 over Q that algebra is
/// a division algebra, one per prime.
LinearMap sp_element(const FieldSpec& field, unsigned long p);

struct AutomorphismCheck {
    bool ok = false;
    std::string reason;
    /// Basis pair (i, j) violating multiplicativity, when that is the failure.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Invertibility, unit preservation, and multiplicativity on all 64 basis
/// pairs (which spans bilinearity, hence suffices).
AutomorphismCheck is_automorphism(const LinearMap& m);
/// Same scan, with the flag set on success.
LinearMap verify_automorphism(LinearMap m);

LinearMap compose(const LinearMap& m1, const LinearMap& m2); // m1 after m2
LinearMap inverse(const LinearMap& m);
/// Least n <= cap with m^n = id, or nullopt ("exceeds cap").
std::optional<int> order(const LinearMap& m, int cap = 12);

/// The three non-identity involutive torus parameter pairs; solved over the
/// given field and verified, not hardcoded blindly.
std::vector<TorusElement> involutive_torus_elements(const FieldSpec& field);

/// Exact 1-eigenspace of an order-<=2 verified automorphism, returned as a
/// subalgebra basis; dimension 4 for t != id (checked), 8 for the identity.
SubalgebraBasis fixed_subalgebra(const LinearMap& t);

/// Exact kernel of (m - lambda id).
std::vector<Vec> eigenspace(const LinearMap& m, const Scalar& lambda);

/// Quaternion basis {e, a, b, ab} of a 4-dimensional unital closed
/// subalgebra, with a^2 = alpha e and b^2 = beta e.
struct QuaternionPresentation {
    Vec e, a, b, ab;
    Scalar alpha, beta;
};
QuaternionPresentation quaternion_presentation(const SubalgebraBasis& d);

/// The automorphism x + ya -> d x d^-1 + (p d y d^-1) a attached to the
/// doubling decomposition C = D + Da.  Requires d invertible in D, N(p) = 1,
/// and a in D-perp with N(a) != 0.  Returns a verified automorphism.
LinearMap aut_fixing_subalgebra(const Vec& d_elem, const Vec& p_elem,
                                const SubalgebraBasis& D, const Vec& a);

bool commutes_with(const LinearMap& f, const LinearMap& t);
bool leaves_invariant(const LinearMap& f, const SubalgebraBasis& D);

} // namespace octo
