#include "hyct/mat.hpp"

#include <cmath>
#include <stdexcept>

namespace hyct {

Mat::Mat(int rows, int cols, std::initializer_list<double> vals) : Mat(rows, cols) {
  if (static_cast<int>(vals.size()) != rows * cols)
    throw std::invalid_argument("Mat: initializer size does not match dimensions");
  int idx = 0;
  for (double v : vals) a_[idx++] = v;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::reversed() const {
  Mat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(rows_ - 1 - i, cols_ - 1 - j);
  return r;
}

Mat Mat::trailing(int size) const {
  if (size < 0 || size > rows_ || size > cols_)
    throw std::out_of_range("Mat::trailing: size out of range");
  Mat t(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) t.at(i, j) = at(rows_ - size + i, cols_ - size + j);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Mat: incompatible product dimensions");
  Mat p(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const double v = at(i, l);
      if (v == 0.0) continue;
      for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += v * rhs.at(l, j);
    }
  return p;
}

Mat Mat::operator-(const Mat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("Mat: incompatible difference dimensions");
  Mat d(rows_, cols_);
  for (int i = 0; i < rows_ * cols_; ++i) d.a_[i] = a_[i] - rhs.a_[i];
  return d;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::fabs(v));
  return m;
}

double Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::det: matrix not square");
  const int n = rows_;
  if (n == 0) return 1.0;
  Mat lu = *this;
  double d = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(lu.at(r, c)) > std::fabs(lu.at(piv, c))) piv = r;
    if (lu.at(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(lu.at(piv, j), lu.at(c, j));
      d = -d;
    }
    d *= lu.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      const double f = lu.at(r, c) / lu.at(c, c);
      for (int j = c; j < n; ++j) lu.at(r, j) -= f * lu.at(c, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: matrix not square");
  const int n = rows_;
  Mat work = *this;
  Mat inv = Mat::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(work.at(r, c)) > std::fabs(work.at(piv, c))) piv = r;
    const double p = work.at(piv, c);
    if (std::fabs(p) < 1e-300) throw std::runtime_error("Mat::inverse: singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    const double s = 1.0 / work.at(c, c);
    for (int j = 0; j < n; ++j) {
      work.at(c, j) *= s;
      inv.at(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = work.at(r, c);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

}  // namespace hyct
