#pragma once

#include "octo/field.hpp"

#include <map>
#include <optional>

namespace octo {

/// A place of Q: the real place or a finite prime.
struct Place {
    bool infinite = false;
    unsigned long p = 0;

    static Place infinity() { return Place{true, 0}; }
    static Place prime(unsigned long p) { return Place{false, p}; }
    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return infinite; // infinity sorts first
        return p < o.p;
    }
    std::string to_string() const { return infinite ? "infinity" : std::to_string(p); }
};

/// v with x = p^v * u, u a p-unit.  Error on x = 0.
long padic_valuation(const mpq_class& x, unsigned long p);
long padic_valuation(const Scalar& x, unsigned long p);

/// p-unit part of x (x / p^v) as an exact rational.
mpq_class padic_unit_part(const mpq_class& x, unsigned long p);

/// Smallest positive quadratic non-residue mod an odd prime.
Scalar quadratic_nonresidue(unsigned long p);

/// Legendre symbol of the p-unit rational u (both num and den prime to p).
int legendre_of_unit(const mpq_class& u, unsigned long p);

/// Residue mod 8 of an odd rational (num and den both odd).
unsigned long odd_unit_mod8(const mpq_class& u);

/// Prime factorization of |n| (trial division; inputs are small by design).
std::map<unsigned long, unsigned long> factor_abs(const mpz_class& n);

/// Squarefree integer part of a nonzero rational, sign included.
mpz_class squarefree_part(const mpq_class& x);

/// Canonical square-class representative of x in the given field:
/// C -> 1; R -> sign; Fp -> 1 or N_p; Qp (p odd) -> {1, p, N_p, p*N_p};
/// Q2 -> {+-1, +-2, +-5, +-10}; Q -> squarefree part.
Scalar square_class(const Scalar& x, const FieldSpec& field);

/// Hilbert symbol over a formal or local field: +1 iff z^2 = a x^2 + b y^2
/// has a nontrivial solution.  Over Q use hilbert_symbol_at_place.
int hilbert_symbol(const Scalar& a, const Scalar& b, const FieldSpec& field);

/// Local Hilbert symbol of rational a, b viewed in Q_place (infinity = R).
int hilbert_symbol_at_place(const mpq_class& a, const mpq_class& b, const Place& place);

/// Places where the symbol of (a, b) can be -1: infinity, 2, and the odd
/// primes dividing the squarefree part of a or b.
std::vector<Place> candidate_places(const mpq_class& a, const mpq_class& b);

} // namespace octo
