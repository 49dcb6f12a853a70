#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace hyct::oracles {

namespace {

// Plus-family trace at x = 0: the characteristic through (t0, 0) either
// entered at x = 1 carrying the control or started inside with w0.
double plus_value_at_left(const CharacteristicProblem& p, int q, double t0) {
  const double lam = p.speeds[p.k + q];
  const double entry = t0 - 1.0 / lam;
  if (entry >= 0.0) {
    if (p.control.empty() || !p.control[q]) return 0.0;
    return p.control[q](entry);
  }
  return p.w0[p.k + q](lam * t0);
}

}  // namespace

double primal_value(const CharacteristicProblem& p, int comp, double t, double x) {
  const int n = p.k + p.m;
  if (comp < 0 || comp >= n) throw std::out_of_range("primal_value: component");
  const double lam = p.speeds[comp];
  if (comp >= p.k) {
    const int q = comp - p.k;
    const double entry = t - (1.0 - x) / lam;
    if (entry >= 0.0) {
      if (p.control.empty() || !p.control[q]) return 0.0;
      return p.control[q](entry);
    }
    return p.w0[comp](x + lam * t);
  }
  const double t0 = t - x / lam;
  if (t0 < 0.0) return p.w0[comp](x - lam * t);
  double acc = 0.0;
  for (int q = 0; q < p.m; ++q) acc += p.boundary.at(comp, q) * plus_value_at_left(p, q, t0);
  return acc;
}

double dual_value(const DualCharacteristicProblem& p, int comp, double s, double x) {
  const int n = p.k + p.m;
  if (comp < 0 || comp >= n) throw std::out_of_range("dual_value: component");
  const double lam = p.speeds[comp];
  if (comp < p.k) {
    // Minus dual moves leftward in backward time, zero inflow at x = 1.
    const double origin = x + lam * s;
    return origin <= 1.0 ? p.terminal[comp](origin) : 0.0;
  }
  // Plus dual moves rightward in backward time; inflow at x = 0 is
  // lambda_p v_p(s,0) = sum_i B_{i,p} lambda_i v_i(s,0) when S = 0.
  const double s0 = s - x / lam;
  if (s0 <= 0.0) return p.terminal[comp](x - lam * s);
  const int q = comp - p.k;
  double acc = 0.0;
  for (int i = 0; i < p.k; ++i) {
    const double li = p.speeds[i];
    const double origin = li * s0;
    if (origin <= 1.0) acc += p.boundary.at(i, q) * li * p.terminal[i](origin);
  }
  return acc / lam;
}

double dual_trace_value(const DualCharacteristicProblem& p, int q, double t, double horizon) {
  const double lam = p.speeds[p.k + q];
  return lam * dual_value(p, p.k + q, horizon - t, 1.0);
}

double cone_floor(const CharacteristicProblem& p, double horizon, int quad_points) {
  const int n = p.k + p.m;
  double acc = 0.0;
  const double h = 1.0 / quad_points;
  for (int j = 0; j <= quad_points; ++j) {
    const double x = j * h;
    double node = 0.0;
    for (int comp = 0; comp < n; ++comp) {
      double fixed = 0.0;
      const double lam = p.speeds[comp];
      if (comp >= p.k) {
        if (horizon - (1.0 - x) / lam < 0.0) fixed = p.w0[comp](x + lam * horizon);
      } else {
        const double t0 = horizon - x / lam;
        if (t0 < 0.0) {
          fixed = p.w0[comp](x - lam * horizon);
        } else {
          for (int q = 0; q < p.m; ++q) {
            const double lq = p.speeds[p.k + q];
            if (t0 < 1.0 / lq) fixed += p.boundary.at(comp, q) * p.w0[p.k + q](lq * t0);
          }
        }
      }
      node += fixed * fixed;
    }
    acc += (j == 0 || j == quad_points) ? 0.5 * node : node;
  }
  return std::sqrt(acc * h);
}

double brute_force_det(const Mat& a) {
  const int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("brute_force_det: matrix not square");
  if (n == 0) return 1.0;
  if (n == 1) return a.at(0, 0);
  double acc = 0.0;
  for (int c = 0; c < n; ++c) {
    Mat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = a.at(i, j);
      }
    }
    const double term = a.at(0, c) * brute_force_det(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

double integrate(const ScalarFn& f, int n) {
  double acc = 0.5 * (f(0.0) + f(1.0));
  for (int j = 1; j < n; ++j) acc += f(static_cast<double>(j) / n);
  return acc / n;
}

}  // namespace hyct::oracles
