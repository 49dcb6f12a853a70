#pragma once

#include "hyct/mat.hpp"

namespace hyct {

/// Determinant threshold used by the matrix-class membership tests: a
/// trailing i x i minor counts as invertible when |det| exceeds
/// det_tol * (max absolute entry of the submatrix)^i. Both classes are
/// open sets, so a relative tolerance is the robust floating-point reading
/// of "invertible".
inline constexpr double kDefaultDetTol = 1e-10;

/// Membership test for the boundary-matrix class used by null
/// controllability: every trailing i x i minor with 1 <= i <= min(k, m-1)
/// must be invertible. Vacuously true when m = 1.
bool in_class_b(const Mat& b, int k, int m, double det_tol = kDefaultDetTol);

/// Membership test for the exact-controllability class: trailing minors up
/// to order k must be invertible. Requires m >= k.
bool in_class_be(const Mat& b, int k, int m, double det_tol = kDefaultDetTol);

/// Shared minor test: trailing i x i minors invertible for 1 <= i <= imax.
bool trailing_minors_invertible(const Mat& b, int imax, double det_tol = kDefaultDetTol);

}  // namespace hyct
