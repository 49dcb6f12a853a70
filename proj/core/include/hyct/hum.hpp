#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyct/solver.hpp"

namespace hyct {

/// Control-to-state map F_T: terminal state of the primal solve from zero
/// initial data under the control U.
StateField apply_ft(const DiscreteSystem& ds, const ControlSignal& u);

/// Adjoint F_T^*: the weighted plus-family trace Sigma_+(1) v_+(., 1) of the
/// dual solve with terminal data v.
ControlSignal apply_ft_star(const DiscreteSystem& ds, const StateField& v);

/// One application of the (regularised) HUM Gramian: F_T(F_T^*(v)) + eps*v.
StateField gramian_apply(const DiscreteSystem& ds, const StateField& v, double eps);

struct CgResult {
  StateField phi;
  int iterations = 0;
  double residual = 0.0;  // relative to the right-hand side norm
  bool converged = false;
};

/// Matrix-free conjugate gradient on (Gramian + eps*I) phi = rhs in the
/// trapezoid L2 inner product. The Gramian is only ever applied, never
/// assembled: one application costs a dual and a primal solve.
CgResult solve_gramian(const DiscreteSystem& ds, const StateField& rhs, double eps,
                       double cg_tol, int cg_maxit);

/// Power-iteration estimate of the Gramian operator norm.
double estimate_gramian_norm(const DiscreteSystem& ds, int iters = 12,
                             std::uint64_t seed = 0x9e3779b97f4a7c15ull);

struct HumParams {
  double eps = 1e-6;
  bool eps_relative = true;  // interpret eps relative to an estimate of |Gramian|
  double cg_tol = 1e-8;
  int cg_maxit = 500;
  bool allow_experimental_w_coupling = false;
};

struct GramianReport {
  ControlSignal control;
  StateField multiplier;  // the HUM minimiser phi
  int cg_iterations = 0;
  double cg_residual = 0.0;
  bool cg_converged = false;
  double terminal_residual_norm = 0.0;
  double eps = 0.0;  // resolved absolute regularisation weight
  std::vector<std::string> warnings;
};

/// HUM null-control synthesis: solves (Gramian + eps) phi = -S_T w0 and
/// returns U = F_T^*(phi) together with the measured relative terminal
/// residual |w(T)| / |w0|. T > T_opt and membership of B in the null class
/// are recommended, not enforced; violations are reported as warnings.
GramianReport synthesize_null_control(const HyperbolicSystem& system, const StateField& w0,
                                      double horizon, const Grid& grid, const HumParams& params);

/// HUM exact-control synthesis towards the target wT; requires m >= k.
/// Residual is |w(T) - wT| / |wT|.
GramianReport synthesize_exact_control(const HyperbolicSystem& system, const StateField& w0,
                                       const StateField& w_target, double horizon,
                                       const Grid& grid, const HumParams& params);

enum class ObservabilityVariant { Null, Exact };

struct ObservabilityParams {
  int power_iters = 12;
  double inner_tol = 1e-4;
  int inner_maxit = 200;
  double eps = 1e-6;       // regularisation inside the inverse iterations
  double floor = 1e-14;    // denominator floor of the Rayleigh quotients
  std::uint64_t seed = 0x51ab5f1ull;
};

struct ObservabilityEstimate {
  double horizon = 0.0;
  double constant_estimate = 0.0;
  std::string method;
  int iterations = 0;
  double residual = 0.0;  // last relative change of the quotient
  bool degenerate = false;
  bool iteration_capped = false;
};

/// Estimates the best constant of the observability inequality: the minimal
/// Rayleigh quotient of the trace energy |F_T^* v|^2 against |v|^2 (exact
/// variant, inverse power iteration on the Gramian) or against |D v|^2 with
/// D the dual solve to the start of the horizon (null variant, power
/// iteration on the regularised pencil).
ObservabilityEstimate observability_constant(const HyperbolicSystem& system, double horizon,
                                             const Grid& grid, ObservabilityVariant variant,
                                             const ObservabilityParams& params = {});

ObservabilityEstimate observability_constant(const DiscreteSystem& ds,
                                             ObservabilityVariant variant,
                                             const ObservabilityParams& params = {});

}  // namespace hyct
