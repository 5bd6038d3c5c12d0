#pragma once

#include "octo/field.hpp"

#include <optional>

namespace octo {

Mat mat_identity(const FieldSpec& field, std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Scalar& c, const Mat& a);
Vec mat_apply(const Mat& m, const Vec& v);
bool mat_equal(const Mat& a, const Mat& b);
/// Exact inverse; throws std::domain_error on a singular matrix.
Mat mat_inverse(const Mat& m, const FieldSpec& field);
Scalar mat_det(Mat m, const FieldSpec& field);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Reduced row echelon form in place (exact arithmetic, first-nonzero pivot
/// in column order).  Returns the pivot columns.
std::vector<std::size_t> rref(Mat& m, const FieldSpec& field);

/// Canonical kernel basis of m: one vector per free column, unit entry at
/// the free column, ordered by free column index.  Deterministic.
std::vector<Vec> kernel_basis(Mat m, const FieldSpec& field);

/// Coordinates of v in span(basis), if any.  Basis vectors are ambient rows.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& basis, const Vec& v,
                                       const FieldSpec& field);
bool in_span(const std::vector<Vec>& basis, const Vec& v, const FieldSpec& field);

std::size_t rank(Mat m, const FieldSpec& field);

} // namespace octo
