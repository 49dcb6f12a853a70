#pragma once

#include <functional>
#include <vector>

namespace hyct {

/// Snapshot of the n-component state on the spatial nodes x_j = j/nx.
/// Component-major storage: row(i) is the contiguous slice of component i.
struct StateField {
  int n = 0;
  int nx = 0;
  double time = 0.0;
  std::vector<double> v;

  StateField() = default;
  StateField(int n_, int nx_, double time_ = 0.0)
      : n(n_), nx(nx_), time(time_), v(static_cast<size_t>(n_) * (nx_ + 1), 0.0) {}

  double& at(int i, int j) { return v[static_cast<size_t>(i) * (nx + 1) + j]; }
  double at(int i, int j) const { return v[static_cast<size_t>(i) * (nx + 1) + j]; }
  double* row(int i) { return v.data() + static_cast<size_t>(i) * (nx + 1); }
  const double* row(int i) const { return v.data() + static_cast<size_t>(i) * (nx + 1); }

  bool all_finite() const;

  /// Samples per-component functions of x on the nodes.
  static StateField sample(int n, int nx, const std::function<double(int, double)>& f,
                           double time = 0.0);
};

/// m control components sampled on the time nodes t_l = l*dt, l = 0..nt.
struct ControlSignal {
  int m = 0;
  int nt = 0;
  double horizon = 0.0;
  std::vector<double> v;

  ControlSignal() = default;
  ControlSignal(int m_, int nt_, double horizon_)
      : m(m_), nt(nt_), horizon(horizon_), v(static_cast<size_t>(m_) * (nt_ + 1), 0.0) {}

  double& at(int q, int l) { return v[static_cast<size_t>(q) * (nt + 1) + l]; }
  double at(int q, int l) const { return v[static_cast<size_t>(q) * (nt + 1) + l]; }

  bool all_finite() const;

  static ControlSignal sample(int m, int nt, double horizon,
                              const std::function<double(int, double)>& f);
};

/// Weighted outgoing plus-family trace at x = 1 over the horizon, i.e. the
/// discrete realisation of Sigma_+(1) v_+(., 1). Same layout as a control.
struct BoundaryTrace {
  int m = 0;
  int nt = 0;
  double horizon = 0.0;
  std::vector<double> v;

  BoundaryTrace() = default;
  BoundaryTrace(int m_, int nt_, double horizon_)
      : m(m_), nt(nt_), horizon(horizon_), v(static_cast<size_t>(m_) * (nt_ + 1), 0.0) {}

  double& at(int q, int l) { return v[static_cast<size_t>(q) * (nt + 1) + l]; }
  double at(int q, int l) const { return v[static_cast<size_t>(q) * (nt + 1) + l]; }

  ControlSignal as_control() const;
  bool all_finite() const;
};

/// Trapezoid L2(0,1) inner product over all components.
double inner_x(const StateField& a, const StateField& b);
double norm_x(const StateField& a);

/// Trapezoid L2(0,T) inner product over all control components.
double inner_t(const ControlSignal& a, const ControlSignal& b);
double norm_t(const ControlSignal& a);

StateField axpy(double alpha, const StateField& x, const StateField& y);  // alpha*x + y
void scale(StateField& x, double alpha);

}  // namespace hyct
