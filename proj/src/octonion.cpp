#include "octo/octonion.hpp"

#include <sstream>

namespace octo {

namespace {

void check_same_field(const Octonion& a, const Octonion& b) {
    if (a.field != b.field) throw std::invalid_argument("octonion field mismatch");
}

Mat2 mat2_zero(const FieldSpec& f) { return {f.zero(), f.zero(), f.zero(), f.zero()}; }

} // namespace

bool Octonion::operator==(const Octonion& o) const {
    check_same_field(*this, o);
    return left == o.left && right == o.right;
}

Octonion oct_zero(const FieldSpec& field) { return {field, mat2_zero(field), mat2_zero(field)}; }

Octonion oct_identity(const FieldSpec& field) {
    Octonion e = oct_zero(field);
    e.left.a = field.one();
    e.left.d = field.one();
    return e;
}

Octonion oct_basis_element(const FieldSpec& field, std::size_t i) {
    Vec v = zero_vec(field, 8);
    v.at(i) = field.one();
    return oct_from_coords(field, v);
}

Octonion oct_mul(const Octonion& a, const Octonion& b) {
    check_same_field(a, b);
    const Mat2 &x = a.left, &y = a.right, &u = b.left, &v = b.right;
    return {a.field, x * u + v.bar() * y, v * x + y * u.bar()};
}

Octonion oct_add(const Octonion& a, const Octonion& b) {
    check_same_field(a, b);
    return {a.field, a.left + b.left, a.right + b.right};
}

Octonion oct_sub(const Octonion& a, const Octonion& b) {
    check_same_field(a, b);
    return {a.field, a.left - b.left, a.right - b.right};
}

Octonion oct_neg(const Octonion& a) { return {a.field, -a.left, -a.right}; }

Octonion oct_scale(const Scalar& c, const Octonion& a) {
    return {a.field,
            {c * a.left.a, c * a.left.b, c * a.left.c, c * a.left.d},
            {c * a.right.a, c * a.right.b, c * a.right.c, c * a.right.d}};
}

Scalar oct_norm(const Octonion& a) { return a.left.det() - a.right.det(); }

Octonion oct_conj(const Octonion& a) { return {a.field, a.left.bar(), -a.right}; }

Scalar bilinear(const Octonion& a, const Octonion& b) {
    return oct_norm(oct_add(a, b)) - oct_norm(a) - oct_norm(b);
}

Vec oct_coords(const Octonion& a) {
    return {a.left.a,  a.left.b,  a.left.c,  a.left.d,
            a.right.a, a.right.b, a.right.c, a.right.d};
}

Octonion oct_from_coords(const FieldSpec& field, const Vec& c) {
    if (c.size() != 8) throw std::invalid_argument("octonion needs 8 coordinates");
    return {field, {c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
}

namespace {

Mat2 parse_mat2(const FieldSpec& field, const std::string& text) {
    // "[[a,b],[c,d]]"
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 9 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("malformed 2x2 matrix literal: " + text);
    s = s.substr(1, s.size() - 2); // "[a,b],[c,d]"
    auto mid = s.find("],[");
    if (mid == std::string::npos || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("malformed 2x2 matrix literal: " + text);
    std::string row1 = s.substr(1, mid - 1);
    std::string row2 = s.substr(mid + 3, s.size() - mid - 4);
    auto split2 = [&](const std::string& row) {
        auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
            throw std::invalid_argument("malformed matrix row: " + row);
        return std::pair<Scalar, Scalar>{field.parse_scalar(row.substr(0, comma)),
                                         field.parse_scalar(row.substr(comma + 1))};
    };
    auto [a, b] = split2(row1);
    auto [c, d] = split2(row2);
    return {a, b, c, d};
}

} // namespace

Octonion parse_octonion(const FieldSpec& field, const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("octonion literal needs two matrices separated by ';'");
    return {field, parse_mat2(field, text.substr(0, semi)),
            parse_mat2(field, text.substr(semi + 1))};
}

std::string octonion_to_string(const Octonion& a) {
    auto m = [](const Mat2& x) {
        return "[[" + x.a.to_string() + "," + x.b.to_string() + "],[" + x.c.to_string() + "," +
               x.d.to_string() + "]]";
    };
    return m(a.left) + ";" + m(a.right);
}

} // namespace octo
