#include "octo/symbols.hpp"

#include <algorithm>
#include <set>

namespace octo {

long padic_valuation(const mpq_class& x, unsigned long p) {
    if (sgn(x) == 0) throw std::domain_error("valuation of zero undefined");
    mpz_class pz(static_cast<long>(p)), tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

long padic_valuation(const Scalar& x, unsigned long p) {
    if (x.modulus() != 0) throw std::invalid_argument("valuation needs a characteristic-0 scalar");
    return padic_valuation(x.value(), p);
}

mpq_class padic_unit_part(const mpq_class& x, unsigned long p) {
    if (sgn(x) == 0) throw std::domain_error("valuation of zero undefined");
    mpz_class pz(static_cast<long>(p)), n, d;
    mpz_remove(n.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t());
    mpz_remove(d.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t());
    mpq_class u(n, d);
    u.canonicalize();
    return u;
}

Scalar quadratic_nonresidue(unsigned long p) {
    if (p == 2) throw std::invalid_argument("square classes of Q_2 are handled separately");
    FieldSpec fp = FieldSpec::prime_field(p);
    std::set<unsigned long> squares;
    for (unsigned long r = 1; r < p; ++r) squares.insert((r * r) % p);
    for (unsigned long n = 2; n < p; ++n)
        if (!squares.count(n)) return fp.scalar(static_cast<long>(n));
    throw std::logic_error("no non-residue found (p not an odd prime?)");
}

int legendre_of_unit(const mpq_class& u, unsigned long p) {
    mpz_class pz(static_cast<long>(p));
    int ln = mpz_legendre(u.get_num().get_mpz_t(), pz.get_mpz_t());
    int ld = mpz_legendre(u.get_den().get_mpz_t(), pz.get_mpz_t());
    if (ln == 0 || ld == 0) throw std::domain_error("not a p-unit");
    return ln * ld;
}

unsigned long odd_unit_mod8(const mpq_class& u) {
    unsigned long n = mpz_fdiv_ui(u.get_num().get_mpz_t(), 8);
    unsigned long d = mpz_fdiv_ui(u.get_den().get_mpz_t(), 8);
    if (n % 2 == 0 || d % 2 == 0) throw std::domain_error("not a 2-unit");
    return (n * d) % 8; // d^-1 = d mod 8 for odd d
}

std::map<unsigned long, unsigned long> factor_abs(const mpz_class& n) {
    if (sgn(n) == 0) throw std::domain_error("factoring zero");
    mpz_class m = abs(n);
    std::map<unsigned long, unsigned long> out;
    for (unsigned long d = 2; mpz_class(d) * d <= m && d < (1ul << 20); d == 2 ? d = 3 : d += 2) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++out[d];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    }
    if (m > 1) {
        if (!m.fits_ulong_p() && mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
            throw std::domain_error("coefficient too large to factor exactly");
        if (m.fits_ulong_p()) {
            ++out[m.get_ui()];
        } else {
            throw std::domain_error("prime factor exceeds supported range");
        }
    }
    return out;
}

mpz_class squarefree_part(const mpq_class& x) {
    if (sgn(x) == 0) throw std::domain_error("squarefree part of zero undefined");
    // x and num*den differ by den^2, hence share a square class.
    mpz_class prod = x.get_num() * x.get_den();
    mpz_class out(sgn(prod));
    for (const auto& [p, e] : factor_abs(prod))
        if (e % 2 == 1) out *= mpz_class(static_cast<long>(p));
    return out;
}

Scalar square_class(const Scalar& x, const FieldSpec& field) {
    if (x.is_zero()) throw std::domain_error("square class of zero undefined");
    switch (field.kind()) {
        case FieldKind::ComplexFormal:
            return field.one();
        case FieldKind::RealsFormal:
            return field.scalar(x.sign());
        case FieldKind::PrimeField: {
            if (x.modulus() != field.prime())
                throw std::invalid_argument("scalar does not belong to this prime field");
            mpz_class pz(static_cast<long>(field.prime()));
            int l = mpz_legendre(x.value().get_num().get_mpz_t(), pz.get_mpz_t());
            return l == 1 ? field.one() : quadratic_nonresidue(field.prime());
        }
        case FieldKind::Padic: {
            unsigned long p = field.prime();
            long v = padic_valuation(x.value(), p);
            mpq_class u = padic_unit_part(x.value(), p);
            if (p == 2) {
                unsigned long m8 = odd_unit_mod8(u);
                long unit_rep = m8 == 1 ? 1 : m8 == 3 ? -5 : m8 == 5 ? 5 : -1;
                return field.scalar(unit_rep * ((v % 2 != 0) ? 2 : 1));
            }
            bool odd_val = ((v % 2) + 2) % 2 == 1;
            long cls = legendre_of_unit(u, p) == 1
                           ? 1
                           : quadratic_nonresidue(p).value().get_num().get_si();
            return field.scalar(cls * (odd_val ? static_cast<long>(p) : 1));
        }
        case FieldKind::Rationals:
            return field.from_rational(mpq_class(squarefree_part(x.value())));
    }
    throw std::logic_error("unreachable");
}

namespace {

int hilbert_symbol_padic(const mpq_class& a, const mpq_class& b, unsigned long p) {
    long va = padic_valuation(a, p), vb = padic_valuation(b, p);
    mpq_class u = padic_unit_part(a, p), v = padic_unit_part(b, p);
    long alpha = ((va % 2) + 2) % 2, beta = ((vb % 2) + 2) % 2;
    if (p == 2) {
        auto eps = [](unsigned long m8) { return (m8 == 3 || m8 == 7) ? 1 : 0; }; // (u-1)/2 mod 2
        auto omega = [](unsigned long m8) { return (m8 == 3 || m8 == 5) ? 1 : 0; }; // (u^2-1)/8 mod 2
        unsigned long mu = odd_unit_mod8(u), mv = odd_unit_mod8(v);
        long e = eps(mu) * eps(mv) + alpha * omega(mv) + beta * omega(mu);
        return e % 2 == 0 ? 1 : -1;
    }
    long eps_p = ((p - 1) / 2) % 2;
    int sym = (alpha * beta * eps_p) % 2 == 0 ? 1 : -1;
    if (beta) sym *= legendre_of_unit(u, p);
    if (alpha) sym *= legendre_of_unit(v, p);
    return sym;
}

} // namespace

int hilbert_symbol(const Scalar& a, const Scalar& b, const FieldSpec& field) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("Hilbert symbol needs nonzero entries");
    switch (field.kind()) {
        case FieldKind::ComplexFormal:
            return 1;
        case FieldKind::RealsFormal:
            return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
        case FieldKind::PrimeField:
            // Every nondegenerate ternary form over F_p, p odd, is isotropic.
            return 1;
        case FieldKind::Padic:
            return hilbert_symbol_padic(a.value(), b.value(), field.prime());
        case FieldKind::Rationals:
            throw std::invalid_argument("over Q use hilbert_symbol_at_place");
    }
    throw std::logic_error("unreachable");
}

int hilbert_symbol_at_place(const mpq_class& a, const mpq_class& b, const Place& place) {
    if (sgn(a) == 0 || sgn(b) == 0) throw std::domain_error("Hilbert symbol needs nonzero entries");
    if (place.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    return hilbert_symbol_padic(a, b, place.p);
}

std::vector<Place> candidate_places(const mpq_class& a, const mpq_class& b) {
    std::set<unsigned long> primes{2};
    for (const mpq_class& x : {a, b})
        for (const auto& [p, e] : factor_abs(mpz_class(x.get_num() * x.get_den())))
            if (e % 2 == 1) primes.insert(p);
    std::vector<Place> out{Place::infinity()};
    for (unsigned long p : primes) out.push_back(Place::prime(p));
    return out;
}

} // namespace octo
