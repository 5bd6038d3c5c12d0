#include "octo/linalg.hpp"

namespace octo {

Mat mat_identity(const FieldSpec& field, std::size_t n) {
    Mat m = zero_mat(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    if (!a.empty() && a[0].size() != k) throw std::invalid_argument("matrix shape mismatch");
    Mat out(n, Vec(c, a[0][0] - a[0][0]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Scalar acc = a[i][0] - a[i][0];
            for (std::size_t t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
            out[i][j] = acc;
        }
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
    return out;
}

Mat mat_scale(const Scalar& c, const Mat& a) {
    Mat out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec out(m.size(), v[0] - v[0]);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Scalar acc = v[0] - v[0];
        for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::size_t> rref(Mat& m, const FieldSpec& field) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Scalar inv = m[r][c].inverse();
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    (void)field;
    return pivots;
}

std::vector<Vec> kernel_basis(Mat m, const FieldSpec& field) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    std::vector<std::size_t> pivots = rref(m, field);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(field, cols);
        v[f] = field.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

Mat mat_inverse(const Mat& m, const FieldSpec& field) {
    std::size_t n = m.size();
    Mat aug = zero_mat(field, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = field.one();
    }
    std::vector<std::size_t> pivots = rref(aug, field);
    if (pivots.size() != n || pivots.back() >= n)
        throw std::domain_error("matrix is singular");
    Mat out = zero_mat(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

Scalar mat_det(Mat m, const FieldSpec& field) {
    std::size_t n = m.size();
    Scalar det = field.one();
    for (std::size_t c = 0, r = 0; c < n && r < n; ++c) {
        std::size_t pr = n;
        for (std::size_t i = r; i < n; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr == n) return field.zero();
        if (pr != r) { std::swap(m[r], m[pr]); det = -det; }
        det *= m[r][c];
        Scalar inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return det;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& v,
                                       const FieldSpec& field) {
    if (basis.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    std::size_t n = basis[0].size(), k = basis.size();
    // columns are basis vectors, augmented with v
    Mat aug = zero_mat(field, n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis[j][i];
        aug[i][k] = v[i];
    }
    std::vector<std::size_t> pivots = rref(aug, field);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt; // inconsistent
    Vec coords = zero_vec(field, k);
    for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = aug[i][k];
    return coords;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, const FieldSpec& field) {
    return coordinates_in_span(basis, v, field).has_value();
}

std::size_t rank(Mat m, const FieldSpec& field) { return rref(m, field).size(); }

} // namespace octo
