#pragma once

#include <initializer_list>
#include <vector>

namespace hyct {

/// Small dense row-major matrix. Boundary matrices and the reduction
/// factors are at most a handful of rows, so everything here is plain
/// O(n^3) linear algebra without blocking.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  Mat(int rows, int cols, std::initializer_list<double> vals);

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& at(int i, int j) { return a_[i * cols_ + j]; }
  double at(int i, int j) const { return a_[i * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  Mat transposed() const;
  /// Reverses both the row and the column order.
  Mat reversed() const;
  /// Submatrix formed from the last `size` rows and columns.
  Mat trailing(int size) const;

  Mat operator*(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;

  double max_abs() const;
  /// Determinant via LU with partial pivoting.
  double det() const;
  /// Inverse via Gauss-Jordan with partial pivoting; throws on (near-)singular input.
  Mat inverse() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

}  // namespace hyct
