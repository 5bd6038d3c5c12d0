#pragma once

#include "octo/field.hpp"

#include <array>

namespace octo {

/// 2x2 matrix [[a, b], [c, d]] over an exact scalar field.
struct Mat2 {
    Scalar a, b, c, d;

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool operator!=(const Mat2& o) const { return !(*this == o); }

    Scalar det() const { return a * d - b * c; }
    Scalar trace() const { return a + d; }
    /// Bar involution [[d, -b], [-c, a]]; x * bar(x) = det(x) * id.
    Mat2 bar() const { return {d, -b, -c, a}; }
};

/// Split octonion: an ordered pair of 2x2 matrices in the fixed basis
/// B = [(E11,0),(E12,0),(E21,0),(E22,0),(0,E11),(0,E12),(0,E21),(0,E22)].
/// This basis order makes the standard diagonal torus literally diagonal.
struct Octonion {
    FieldSpec field;
    Mat2 left, right;

    bool operator==(const Octonion& o) const;
    bool operator!=(const Octonion& o) const { return !(*this == o); }
};

Octonion oct_zero(const FieldSpec& field);
Octonion oct_identity(const FieldSpec& field);
Octonion oct_basis_element(const FieldSpec& field, std::size_t i);

/// (x,y)(u,v) = (xu + bar(v)y, vx + y bar(u)).
Octonion oct_mul(const Octonion& a, const Octonion& b);
Octonion oct_add(const Octonion& a, const Octonion& b);
Octonion oct_sub(const Octonion& a, const Octonion& b);
Octonion oct_neg(const Octonion& a);
Octonion oct_scale(const Scalar& c, const Octonion& a);

/// N((x,y)) = det(x) - det(y).
Scalar oct_norm(const Octonion& a);

/// (x,y) -> (bar(x), -y); involutive anti-automorphism.
Octonion oct_conj(const Octonion& a);

/// Polarization <a,b> = N(a+b) - N(a) - N(b).
Scalar bilinear(const Octonion& a, const Octonion& b);

Vec oct_coords(const Octonion& a);
Octonion oct_from_coords(const FieldSpec& field, const Vec& coords);

/// Literal grammar: "[[a,b],[c,d]];[[e,f],[g,h]]" with the field's scalar grammar.
Octonion parse_octonion(const FieldSpec& field, const std::string& text);
std::string octonion_to_string(const Octonion& a);

} // namespace octo
