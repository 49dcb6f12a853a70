#include "hyct/matrix_class.hpp"

#include <cmath>
#include <stdexcept>

namespace hyct {

bool trailing_minors_invertible(const Mat& b, int imax, double det_tol) {
  for (int i = 1; i <= imax; ++i) {
    const Mat sub = b.trailing(i);
    const double scale = sub.max_abs();
    if (scale == 0.0) return false;
    if (std::fabs(sub.det()) <= det_tol * std::pow(scale, i)) return false;
  }
  return true;
}

bool in_class_b(const Mat& b, int k, int m, double det_tol) {
  if (b.rows() != k || b.cols() != m)
    throw std::invalid_argument("in_class_b: boundary matrix must be k x m");
  return trailing_minors_invertible(b, std::min(k, m - 1), det_tol);
}

bool in_class_be(const Mat& b, int k, int m, double det_tol) {
  if (b.rows() != k || b.cols() != m)
    throw std::invalid_argument("in_class_be: boundary matrix must be k x m");
  if (m < k) throw std::invalid_argument("in_class_be: requires m >= k");
  return trailing_minors_invertible(b, k, det_tol);
}

}  // namespace hyct
