#include "hyct/state.hpp"

#include <cmath>
#include <stdexcept>

namespace hyct {

namespace {

bool finite(const std::vector<double>& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

bool StateField::all_finite() const { return finite(v); }
bool ControlSignal::all_finite() const { return finite(v); }
bool BoundaryTrace::all_finite() const { return finite(v); }

StateField StateField::sample(int n, int nx, const std::function<double(int, double)>& f,
                              double time) {
  StateField s(n, nx, time);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= nx; ++j) s.at(i, j) = f(i, static_cast<double>(j) / nx);
  return s;
}

ControlSignal ControlSignal::sample(int m, int nt, double horizon,
                                    const std::function<double(int, double)>& f) {
  ControlSignal u(m, nt, horizon);
  for (int q = 0; q < m; ++q)
    for (int l = 0; l <= nt; ++l)
      u.at(q, l) = f(q, horizon * static_cast<double>(l) / nt);
  return u;
}

ControlSignal BoundaryTrace::as_control() const {
  ControlSignal u(m, nt, horizon);
  u.v = v;
  return u;
}

double inner_x(const StateField& a, const StateField& b) {
  if (a.n != b.n || a.nx != b.nx) throw std::invalid_argument("inner_x: shape mismatch");
  const double dx = 1.0 / a.nx;
  double acc = 0.0;
  for (int i = 0; i < a.n; ++i) {
    const double* pa = a.row(i);
    const double* pb = b.row(i);
    double s = 0.5 * (pa[0] * pb[0] + pa[a.nx] * pb[a.nx]);
    for (int j = 1; j < a.nx; ++j) s += pa[j] * pb[j];
    acc += s;
  }
  return acc * dx;
}

double norm_x(const StateField& a) { return std::sqrt(inner_x(a, a)); }

double inner_t(const ControlSignal& a, const ControlSignal& b) {
  if (a.m != b.m || a.nt != b.nt) throw std::invalid_argument("inner_t: shape mismatch");
  const double dt = a.horizon / a.nt;
  double acc = 0.0;
  for (int q = 0; q < a.m; ++q) {
    const double* pa = a.v.data() + static_cast<size_t>(q) * (a.nt + 1);
    const double* pb = b.v.data() + static_cast<size_t>(q) * (a.nt + 1);
    double s = 0.5 * (pa[0] * pb[0] + pa[a.nt] * pb[a.nt]);
    for (int l = 1; l < a.nt; ++l) s += pa[l] * pb[l];
    acc += s;
  }
  return acc * dt;
}

double norm_t(const ControlSignal& a) { return std::sqrt(inner_t(a, a)); }

StateField axpy(double alpha, const StateField& x, const StateField& y) {
  if (x.n != y.n || x.nx != y.nx) throw std::invalid_argument("axpy: shape mismatch");
  StateField r = y;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += alpha * x.v[i];
  return r;
}

void scale(StateField& x, double alpha) {
  for (double& v : x.v) v *= alpha;
}

}  // namespace hyct
