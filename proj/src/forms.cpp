#include "octo/forms.hpp"

#include <algorithm>
#include <set>

namespace octo {

DiagonalForm::DiagonalForm(std::vector<Scalar> coeffs, FieldSpec f)
    : coefficients(std::move(coeffs)), field(f) {
    if (coefficients.empty()) throw std::invalid_argument("empty form");
    for (const auto& c : coefficients)
        if (c.is_zero()) throw std::invalid_argument("degenerate form: zero coefficient");
}

Scalar DiagonalForm::evaluate(const Vec& x) const {
    if (x.size() != dim()) throw std::invalid_argument("dimension mismatch");
    Scalar acc = field.zero();
    for (std::size_t i = 0; i < dim(); ++i) acc += coefficients[i] * x[i] * x[i];
    return acc;
}

namespace {

// Projective enumeration over F_p: vectors whose first nonzero coordinate
// is 1, searched over growing support prefixes so low-dimensional witnesses
// come out first.
std::optional<Vec> fp_isotropy_search(const DiagonalForm& f) {
    unsigned long p = f.field.prime();
    std::size_t n = f.dim();
    for (std::size_t support = 1; support <= n; ++support) {
        // first nonzero coordinate at index `lead`, support within [lead, support)
        for (std::size_t lead = 0; lead + 1 <= support; ++lead) {
            std::size_t free_coords = support - lead - 1;
            unsigned long count = 1;
            for (std::size_t i = 0; i < free_coords; ++i) count *= p;
            for (unsigned long code = 0; code < count; ++code) {
                Vec x = zero_vec(f.field, n);
                x[lead] = f.field.one();
                unsigned long rest = code;
                bool last_nonzero = free_coords == 0;
                for (std::size_t i = 0; i < free_coords; ++i) {
                    unsigned long digit = rest % p;
                    rest /= p;
                    x[lead + 1 + i] = f.field.scalar(static_cast<long>(digit));
                    if (i + 1 == free_coords && digit != 0) last_nonzero = true;
                }
                if (!last_nonzero) continue; // shorter support already visited
                if (f.evaluate(x).is_zero()) return x;
            }
        }
    }
    return std::nullopt;
}

bool has_mixed_signs(const DiagonalForm& f) {
    bool pos = false, neg = false;
    for (const auto& c : f.coefficients) (c.sign() > 0 ? pos : neg) = true;
    return pos && neg;
}

int hilbert_local(const mpq_class& a, const mpq_class& b, const FieldSpec& field) {
    return hilbert_symbol(field.from_rational(a), field.from_rational(b), field);
}

// Ternary <a,b,c> is isotropic over a local/formal field iff the symbol
// (-ac, -bc) is +1.
bool ternary_isotropic_local(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                             const FieldSpec& field) {
    return hilbert_local(-a * c, -b * c, field) == 1;
}

// Rank-4 local criterion: isotropic iff det is not a square, or det is a
// square and the Hasse invariant equals (-1,-1).
bool quaternary_isotropic_local(const std::vector<mpq_class>& c, const FieldSpec& field) {
    mpq_class det = c[0] * c[1] * c[2] * c[3];
    Scalar det_class = square_class(field.from_rational(det), field);
    if (det_class != field.one()) return true;
    int hasse = 1;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) hasse *= hilbert_local(c[i], c[j], field);
    return hasse == hilbert_local(mpq_class(-1), mpq_class(-1), field);
}

bool padic_isotropic(const DiagonalForm& f) {
    std::vector<mpq_class> c;
    for (const auto& s : f.coefficients) c.push_back(s.value());
    switch (f.dim()) {
        case 1: return false;
        case 2: return square_class(f.field.from_rational(-c[0] * c[1]), f.field) == f.field.one();
        case 3: return ternary_isotropic_local(c[0], c[1], c[2], f.field);
        case 4: return quaternary_isotropic_local(c, f.field);
        default: return true; // every rank >= 5 form over Q_p is isotropic
    }
}

bool rational_isotropic(const DiagonalForm& f) {
    std::vector<mpq_class> c;
    for (const auto& s : f.coefficients) c.push_back(s.value());
    if (f.dim() == 1) return false;
    if (f.dim() == 2) return squarefree_part(-c[0] * c[1]) == 1;
    if (f.dim() >= 5) return has_mixed_signs(f); // Meyer
    // Hasse-Minkowski: check R and the finitely many primes where a local
    // obstruction can occur (2 and odd primes dividing a squarefree part).
    if (!has_mixed_signs(f)) return false;
    std::set<unsigned long> primes{2};
    for (const auto& x : c)
        for (const auto& [p, e] : factor_abs(mpz_class(x.get_num() * x.get_den())))
            if (e % 2 == 1) primes.insert(p);
    for (unsigned long p : primes) {
        FieldSpec qp = FieldSpec::padic(p);
        bool ok = f.dim() == 3 ? ternary_isotropic_local(c[0], c[1], c[2], qp)
                               : quaternary_isotropic_local(c, qp);
        if (!ok) return false;
    }
    return true;
}

// Exact rational witness for binary forms when -c0*c1 is a rational square:
// c0*s^2 + c1*c0^2 = c0(s^2 + c0*c1) = 0.
std::optional<Vec> binary_rational_witness(const DiagonalForm& f) {
    Scalar prod = -(f.coefficients[0] * f.coefficients[1]);
    Scalar root = f.field.zero();
    if (!prod.sqrt_exact(root)) return std::nullopt;
    return Vec{root, f.coefficients[0]};
}

} // namespace

IsotropyResult is_isotropic(const DiagonalForm& f) {
    switch (f.field.kind()) {
        case FieldKind::PrimeField: {
            auto w = fp_isotropy_search(f);
            return {w.has_value(), w};
        }
        case FieldKind::RealsFormal: {
            if (!has_mixed_signs(f)) return {false, std::nullopt};
            IsotropyResult r{true, std::nullopt};
            if (f.dim() == 2) r.witness = binary_rational_witness(f);
            return r;
        }
        case FieldKind::ComplexFormal:
            return {f.dim() >= 2, std::nullopt};
        case FieldKind::Padic:
            return {padic_isotropic(f), std::nullopt};
        case FieldKind::Rationals: {
            bool iso = rational_isotropic(f);
            IsotropyResult r{iso, std::nullopt};
            if (iso && f.dim() == 2) r.witness = binary_rational_witness(f);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

bool padic_isotropy_search(const std::vector<mpq_class>& coefficients, unsigned long p) {
    std::size_t n = coefficients.size();
    if (n == 0) throw std::invalid_argument("empty form");
    mpz_class pz(static_cast<long>(p));
    // Clear denominators coordinate-wise (c -> c * den^2 keeps the square
    // class) and strip even powers of p; both preserve isotropy.
    std::vector<mpz_class> c(n);
    long maxval = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class q = coefficients[i];
        if (sgn(q) == 0) throw std::invalid_argument("degenerate form");
        mpz_class num = q.get_num() * q.get_den();
        mpz_class stripped;
        long v = static_cast<long>(
            mpz_remove(stripped.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
        c[i] = stripped;
        if (v % 2 == 1) c[i] *= pz;
        maxval = std::max(maxval, v % 2);
    }
    // If every coefficient carries a factor p, scale the whole form by 1/p.
    bool all_div = true;
    for (const auto& x : c) all_div = all_div && mpz_divisible_p(x.get_mpz_t(), pz.get_mpz_t());
    if (all_div) {
        std::vector<mpq_class> scaled;
        for (const auto& x : c) scaled.emplace_back(mpq_class(x) / mpq_class(pz));
        return padic_isotropy_search(scaled, p);
    }
    long k = 2 * maxval + 3;
    mpz_class mod = 1;
    for (long i = 0; i < k; ++i) mod *= pz;

    // valuation of 2*c_i, for the Hensel early exit
    std::vector<long> grad_val(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class two_c = 2 * c[i], tmp;
        grad_val[i] =
            static_cast<long>(mpz_remove(tmp.get_mpz_t(), two_c.get_mpz_t(), pz.get_mpz_t()));
    }

    auto eval_mod = [&](const std::vector<mpz_class>& x, const mpz_class& m) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += c[i] * x[i] * x[i];
        mpz_class r = acc % m;
        if (r < 0) r += m;
        return r;
    };

    // Level-by-level lifting: states are vectors mod p^j solving Q = 0 mod
    // p^j with at least one unit coordinate.  A state whose level already
    // meets the Hensel bound at some unit coordinate certifies a true zero.
    auto hensel_exit = [&](const std::vector<mpz_class>& x, long level) {
        for (std::size_t i = 0; i < n; ++i) {
            bool unit_coord = !mpz_divisible_p(x[i].get_mpz_t(), pz.get_mpz_t());
            if (unit_coord && level >= 2 * grad_val[i] + 1) return true;
        }
        return false;
    };
    std::vector<std::vector<mpz_class>> states;
    {
        // all vectors mod p, deduped later by construction
        std::vector<mpz_class> x(n, 0);
        unsigned long total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= p;
        for (unsigned long code = 0; code < total; ++code) {
            unsigned long rest = code;
            bool unit = false;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<long>(rest % p);
                if (x[i] != 0) unit = true;
                rest /= p;
            }
            if (!unit) continue;
            if (eval_mod(x, pz) == 0) states.push_back(x);
        }
    }
    mpz_class level_mod = pz;
    for (long j = 1; j <= k; ++j) {
        if (states.empty()) return false;
        std::vector<std::vector<mpz_class>> next;
        std::set<std::vector<mpz_class>> seen;
        for (const auto& x : states) {
            if (hensel_exit(x, j)) return true;
            if (j == k) continue; // bound reached without certificate
            // extend to level j+1
            mpz_class next_mod = level_mod * pz;
            std::vector<mpz_class> y(n);
            unsigned long total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= p;
            for (unsigned long code = 0; code < total; ++code) {
                unsigned long rest = code;
                for (std::size_t i = 0; i < n; ++i) {
                    y[i] = x[i] + level_mod * static_cast<long>(rest % p);
                    rest /= p;
                }
                if (eval_mod(y, next_mod) != 0) continue;
                bool unit = false;
                for (std::size_t i = 0; i < n; ++i)
                    if (!mpz_divisible_p(y[i].get_mpz_t(), pz.get_mpz_t())) unit = true;
                if (!unit) continue;
                if (hensel_exit(y, j + 1)) return true;
                if (seen.insert(y).second) next.push_back(y);
                if (next.size() > 200000)
                    throw std::runtime_error("p-adic search state overflow");
            }
        }
        states = std::move(next);
        level_mod *= pz;
    }
    return false;
}

DiagonalForm quaternion_norm_form(const Scalar& alpha, const Scalar& beta,
                                  const FieldSpec& field) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("Pfister presentation needs nonzero parameters");
    return DiagonalForm({field.one(), -alpha, -beta, alpha * beta}, field);
}

DiagonalForm octonion_norm_form(const Scalar& a, const Scalar& b, const Scalar& c,
                                const FieldSpec& field) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::invalid_argument("Pfister presentation needs nonzero parameters");
    return DiagonalForm({field.one(), -a, -b, a * b, -c, a * c, b * c, -(a * b * c)}, field);
}

QuaternionInvariant quaternion_is_split(const Scalar& alpha, const Scalar& beta,
                                        const FieldSpec& field) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("Pfister presentation needs nonzero parameters");
    QuaternionInvariant inv{alpha, beta, field, false, {}};
    if (field.kind() == FieldKind::Rationals) {
        for (const Place& v : candidate_places(alpha.value(), beta.value()))
            if (hilbert_symbol_at_place(alpha.value(), beta.value(), v) == -1)
                inv.ramified_places.push_back(v);
        std::sort(inv.ramified_places.begin(), inv.ramified_places.end());
        inv.split = inv.ramified_places.empty();
    } else {
        inv.split = hilbert_symbol(alpha, beta, field) == 1;
    }
    return inv;
}

bool quaternion_isomorphic(const QuaternionInvariant& q1, const QuaternionInvariant& q2) {
    if (q1.field != q2.field) throw std::invalid_argument("field mismatch");
    if (q1.field.kind() == FieldKind::Rationals)
        return q1.ramified_places == q2.ramified_places;
    // At most one division class over R and Q_p, none over C and F_p.
    return q1.split == q2.split;
}

} // namespace octo
