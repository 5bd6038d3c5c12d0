#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace octo {

/// Base fields supported by the library.  All characteristic-0 kinds store
/// exact rationals; Padic and PrimeField additionally carry a prime.
enum class FieldKind { Rationals, RealsFormal, ComplexFormal, Padic, PrimeField };

class Scalar;

/// A base field together with the data its square-class oracle needs.
/// R and C are modeled formally: elements are rational representatives and
/// only the square-class/sign oracles differ.  Q_p elements are exact
/// rationals queried through valuation oracles, never truncated expansions.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec reals() { return FieldSpec(FieldKind::RealsFormal, 0); }
    static FieldSpec complexes() { return FieldSpec(FieldKind::ComplexFormal, 0); }
    static FieldSpec padic(unsigned long p);       // p prime, 2 allowed
    static FieldSpec prime_field(unsigned long p); // odd prime only

    /// Grammar: "Q" | "R" | "C" | "Qp:<prime>" | "Fp:<odd prime>".
    static FieldSpec parse(const std::string& text);

    FieldKind kind() const { return kind_; }
    unsigned long prime() const;
    /// p for PrimeField arithmetic, 0 for all characteristic-0 kinds.
    unsigned long modulus() const { return kind_ == FieldKind::PrimeField ? p_ : 0; }
    bool is_char_zero() const { return kind_ != FieldKind::PrimeField; }

    std::string to_string() const;
    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar scalar(long n) const;
    Scalar scalar(long num, long den) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Scalar grammar: "n" or "n/d", base 10, optional sign.
    Scalar parse_scalar(const std::string& text) const;

private:
    FieldSpec(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
    FieldKind kind_;
    unsigned long p_;
};

/// An exact field element: an arbitrary-precision rational for
/// characteristic-0 fields, a residue in [0, p) for prime fields.
/// Arithmetic never rounds; mixing elements of different prime fields
/// (or a prime field with a characteristic-0 field) is an error.
class Scalar {
public:
    Scalar() : v_(0), mod_(0) {}
    Scalar(const mpq_class& v, unsigned long modulus);

    const mpq_class& value() const { return v_; }
    unsigned long modulus() const { return mod_; }
    bool is_zero() const { return sgn(v_) == 0; }
    /// Sign of the rational representative; meaningless for prime fields.
    int sign() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    /// Exact square root if this is a perfect square in its field
    /// (rational square for characteristic 0, quadratic residue mod p).
    bool sqrt_exact(Scalar& out) const;

    std::string to_string() const { return v_.get_str(); }

private:
    void check_compatible(const Scalar& o) const;
    void reduce();
    mpq_class v_;
    unsigned long mod_; // 0 = characteristic zero
};

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Vec zero_vec(const FieldSpec& field, std::size_t n);
Mat zero_mat(const FieldSpec& field, std::size_t rows, std::size_t cols);

} // namespace octo
