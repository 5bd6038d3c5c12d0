#include "octo/field.hpp"

namespace octo {

namespace {

bool is_prime_ul(unsigned long n) {
    if (n < 2 || n > (1ul << 20)) return false; // exhaustive oracles need small p
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residue of q = a/b mod p, b invertible mod p.
mpq_class residue_mod(const mpq_class& q, unsigned long p) {
    mpz_class pz(static_cast<long>(p));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw std::domain_error("scalar has denominator divisible by p");
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::domain_error("scalar has denominator divisible by p");
    mpz_class r = (num * den_inv) % pz;
    if (r < 0) r += pz;
    return mpq_class(r);
}

} // namespace

FieldSpec FieldSpec::padic(unsigned long p) {
    if (!is_prime_ul(p)) throw std::invalid_argument("Qp requires a prime p");
    return FieldSpec(FieldKind::Padic, p);
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
    if (!is_prime_ul(p) || p == 2)
        throw std::invalid_argument("Fp requires an odd prime p");
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text == "R") return reals();
    if (text == "C") return complexes();
    auto parse_prime = [&](const std::string& body) -> unsigned long {
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field spec: " + text);
        unsigned long p = std::stoul(body);
        return p;
    };
    if (text.rfind("Qp:", 0) == 0) return padic(parse_prime(text.substr(3)));
    if (text.rfind("Fp:", 0) == 0) return prime_field(parse_prime(text.substr(3)));
    throw std::invalid_argument("malformed field spec: " + text +
                                " (expected Q, R, C, Qp:<prime>, Fp:<odd prime>)");
}

unsigned long FieldSpec::prime() const {
    if (kind_ != FieldKind::Padic && kind_ != FieldKind::PrimeField)
        throw std::logic_error("field has no associated prime");
    return p_;
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::RealsFormal: return "R";
        case FieldKind::ComplexFormal: return "C";
        case FieldKind::Padic: return "Qp:" + std::to_string(p_);
        case FieldKind::PrimeField: return "Fp:" + std::to_string(p_);
    }
    return "?";
}

Scalar FieldSpec::zero() const { return Scalar(mpq_class(0), modulus()); }
Scalar FieldSpec::one() const { return Scalar(mpq_class(1), modulus()); }
Scalar FieldSpec::scalar(long n) const { return Scalar(mpq_class(n), modulus()); }

Scalar FieldSpec::scalar(long num, long den) const {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q, modulus());
}

Scalar FieldSpec::from_rational(const mpq_class& q) const { return Scalar(q, modulus()); }

Scalar FieldSpec::parse_scalar(const std::string& text) const {
    std::string body = text;
    if (!body.empty() && body[0] == '+') body = body.substr(1); // GMP rejects a leading '+'
    mpq_class q;
    if (body.empty() || q.set_str(body, 10) != 0)
        throw std::invalid_argument("malformed scalar: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return Scalar(q, modulus());
}

Scalar::Scalar(const mpq_class& v, unsigned long modulus) : v_(v), mod_(modulus) { reduce(); }

void Scalar::reduce() {
    if (mod_ == 0) return;
    v_ = residue_mod(v_, mod_);
}

void Scalar::check_compatible(const Scalar& o) const {
    if (mod_ != o.mod_)
        throw std::invalid_argument("field mismatch between scalars");
}

int Scalar::sign() const {
    if (mod_ != 0) throw std::logic_error("sign undefined for prime-field residues");
    return sgn(v_);
}

Scalar Scalar::operator-() const { return Scalar(-v_, mod_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_compatible(o);
    return Scalar(v_ + o.v_, mod_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_compatible(o);
    return Scalar(v_ - o.v_, mod_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_compatible(o);
    return Scalar(v_ * o.v_, mod_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_compatible(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check_compatible(o);
    return v_ == o.v_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (mod_ == 0) return Scalar(1 / v_, 0);
    mpz_class pz(static_cast<long>(mod_)), inv;
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), pz.get_mpz_t()) == 0)
        throw std::domain_error("residue not invertible");
    return Scalar(mpq_class(inv), mod_);
}

bool Scalar::sqrt_exact(Scalar& out) const {
    if (mod_ == 0) {
        if (sgn(v_) < 0) return false;
        if (mpz_perfect_square_p(v_.get_num().get_mpz_t()) == 0) return false;
        if (mpz_perfect_square_p(v_.get_den().get_mpz_t()) == 0) return false;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
        out = Scalar(mpq_class(n) / mpq_class(d), 0);
        return true;
    }
    // residue: scan roots, p is small by construction
    mpz_class target = v_.get_num();
    mpz_class pz(static_cast<long>(mod_));
    for (unsigned long r = 0; r < mod_; ++r) {
        mpz_class rz(static_cast<long>(r));
        if ((rz * rz) % pz == target) {
            out = Scalar(mpq_class(rz), mod_);
            return true;
        }
    }
    return false;
}

Vec zero_vec(const FieldSpec& field, std::size_t n) { return Vec(n, field.zero()); }

Mat zero_mat(const FieldSpec& field, std::size_t rows, std::size_t cols) {
    return Mat(rows, zero_vec(field, cols));
}

} // namespace octo
