#pragma once

#include "octo/symbols.hpp"

#include <optional>

namespace octo {

/// Nondegenerate diagonal quadratic form sum c_i x_i^2 over a field.
struct DiagonalForm {
    std::vector<Scalar> coefficients;
    FieldSpec field;

    DiagonalForm(std::vector<Scalar> coeffs, FieldSpec f);
    std::size_t dim() const { return coefficients.size(); }
    Scalar evaluate(const Vec& x) const;
};

struct IsotropyResult {
    bool isotropic = false;
    /// Exact nontrivial zero of the form, when the decision was search-based
    /// (or a rational zero happens to be available).
    std::optional<Vec> witness;
};

/// Decides isotropy per field: exhaustive projective search over F_p
/// (witness returned), sign pattern over formal R, dimension over formal C,
/// Hilbert-symbol criteria over Q_p, Hasse-Minkowski over Q.
IsotropyResult is_isotropic(const DiagonalForm& f);

/// Independent cross-validation oracle: decides isotropy over Q_p by a
/// primitive-solution search mod p^k with k = 2 * max valuation + 3 and the
/// unit-coordinate Hensel lifting criterion.  Never consulted by
/// is_isotropic; kept separate so symbol formulas can be checked against it.
bool padic_isotropy_search(const std::vector<mpq_class>& coefficients, unsigned long p);

/// Split/division fingerprint of the quaternion algebra (alpha, beta):
/// a 2-Pfister presentation plus, over Q, the ramified places.
struct QuaternionInvariant {
    Scalar alpha, beta;
    FieldSpec field;
    bool split = false;
    std::vector<Place> ramified_places; // Rationals only; even cardinality
};

/// The 2-Pfister norm form <1, -alpha, -beta, alpha*beta>.
DiagonalForm quaternion_norm_form(const Scalar& alpha, const Scalar& beta,
                                  const FieldSpec& field);

/// The 3-Pfister norm form
/// <1, -a, -b, ab, -c, ac, bc, -abc> of the octonion algebra (a, b, c).
DiagonalForm octonion_norm_form(const Scalar& a, const Scalar& b, const Scalar& c,
                                const FieldSpec& field);

QuaternionInvariant quaternion_is_split(const Scalar& alpha, const Scalar& beta,
                                        const FieldSpec& field);

/// Complete isomorphy test: verdict equality over formal/local fields,
/// ramified-place-set equality over Q.
bool quaternion_isomorphic(const QuaternionInvariant& q1, const QuaternionInvariant& q2);

} // namespace octo
