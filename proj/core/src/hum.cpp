#include "hyct/hum.hpp"

#include <cmath>
#include <stdexcept>

#include "hyct/matrix_class.hpp"
#include "hyct/random_fields.hpp"
#include "hyct/times.hpp"

namespace hyct {

namespace {

// Right-hand sides this small carry no information at double precision;
// short-circuiting keeps the CG recurrences out of the denormal range.
constexpr double kTinyRhs = 1e-140;

void require_hum_supported(const DiscreteSystem& ds, bool allow_experimental) {
  if (ds.form == CouplingForm::WForm && !ds.coupling_zero && !allow_experimental)
    throw std::invalid_argument(
        "hum: w-form systems with nonzero C are supported only behind the experimental flag; "
        "convert to u-form or enable allow_experimental_w_coupling");
}

}  // namespace

StateField apply_ft(const DiscreteSystem& ds, const ControlSignal& u) {
  StateField zero = ds.make_state();
  return solve_primal(ds, zero, &u).terminal;
}

ControlSignal apply_ft_star(const DiscreteSystem& ds, const StateField& v) {
  return solve_dual(ds, v).trace.as_control();
}

StateField gramian_apply(const DiscreteSystem& ds, const StateField& v, double eps) {
  const ControlSignal u = apply_ft_star(ds, v);
  StateField out = apply_ft(ds, u);
  if (eps != 0.0)
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += eps * v.v[i];
  out.time = ds.horizon;
  return out;
}

CgResult solve_gramian(const DiscreteSystem& ds, const StateField& rhs, double eps,
                       double cg_tol, int cg_maxit) {
  if (!rhs.all_finite()) throw std::invalid_argument("solve_gramian: non-finite right-hand side");
  CgResult res;
  res.phi = ds.make_state(ds.horizon);

  const double bnorm = norm_x(rhs);
  if (bnorm <= kTinyRhs) {
    res.converged = true;
    return res;
  }

  StateField r = rhs;
  StateField p = r;
  double rho = inner_x(r, r);
  for (int it = 0; it < cg_maxit; ++it) {
    const StateField ap = gramian_apply(ds, p, eps);
    const double pap = inner_x(p, ap);
    if (!std::isfinite(pap))
      throw std::runtime_error("solve_gramian: non-finite iterate (divergence)");
    if (pap <= 0.0) break;  // curvature lost to roundoff; best iterate reached
    const double alpha = rho / pap;
    for (size_t i = 0; i < res.phi.v.size(); ++i) {
      res.phi.v[i] += alpha * p.v[i];
      r.v[i] -= alpha * ap.v[i];
    }
    const double rho_next = inner_x(r, r);
    if (!std::isfinite(rho_next))
      throw std::runtime_error("solve_gramian: non-finite iterate (divergence)");
    res.iterations = it + 1;
    res.residual = std::sqrt(rho_next) / bnorm;
    if (res.residual <= cg_tol) {
      res.converged = true;
      return res;
    }
    const double beta = rho_next / rho;
    rho = rho_next;
    for (size_t i = 0; i < p.v.size(); ++i) p.v[i] = r.v[i] + beta * p.v[i];
  }
  res.residual = std::sqrt(rho) / bnorm;
  res.converged = res.residual <= cg_tol;
  return res;
}

double estimate_gramian_norm(const DiscreteSystem& ds, int iters, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StateField v = random_state(ds.n, ds.nx, rng);
  double nrm = norm_x(v);
  if (nrm == 0.0) return 0.0;
  scale(v, 1.0 / nrm);
  double est = 0.0;
  for (int it = 0; it < iters; ++it) {
    StateField av = gramian_apply(ds, v, 0.0);
    est = inner_x(av, v);
    const double anorm = norm_x(av);
    if (anorm <= 1e-300) return 0.0;
    scale(av, 1.0 / anorm);
    v = std::move(av);
  }
  return est;
}

namespace {

struct SynthesisInputs {
  DiscreteSystem ds;
  double eps_abs;
};

SynthesisInputs prepare(const HyperbolicSystem& system, double horizon, const Grid& grid,
                        const HumParams& params, std::vector<std::string>& warnings) {
  SynthesisInputs in{DiscreteSystem(system, grid, horizon), params.eps};
  require_hum_supported(in.ds, params.allow_experimental_w_coupling);
  if (params.eps_relative) {
    const double nrm = estimate_gramian_norm(in.ds);
    in.eps_abs = params.eps * (nrm > 0.0 ? nrm : 1.0);
  }
  const TimeReport tr = time_report(system.speeds);
  if (horizon <= tr.t_opt)
    warnings.push_back("horizon does not exceed the optimal time T_opt = " +
                       std::to_string(tr.t_opt));
  return in;
}

GramianReport run_synthesis(const SynthesisInputs& in, const StateField& w0,
                            const StateField* target, const HumParams& params,
                            std::vector<std::string> warnings) {
  const DiscreteSystem& ds = in.ds;
  GramianReport rep;
  rep.eps = in.eps_abs;
  rep.warnings = std::move(warnings);

  const StateField drift = free_evolution(ds, w0);
  StateField rhs = target ? axpy(-1.0, drift, *target) : drift;
  if (!target) scale(rhs, -1.0);

  // A right-hand side at roundoff relative to the problem scale means the
  // zero control already solves the problem to machine accuracy.
  const double problem_scale =
      std::max(norm_x(w0), target ? norm_x(*target) : 0.0);
  CgResult cg;
  if (norm_x(rhs) <= 1e-13 * problem_scale) {
    cg.phi = ds.make_state(ds.horizon);
    cg.converged = true;
  } else {
    cg = solve_gramian(ds, rhs, in.eps_abs, params.cg_tol, params.cg_maxit);
  }
  rep.multiplier = cg.phi;
  rep.cg_iterations = cg.iterations;
  rep.cg_residual = cg.residual;
  rep.cg_converged = cg.converged;
  if (!cg.converged) rep.warnings.push_back("conjugate gradient stopped at the iteration cap");

  rep.control = apply_ft_star(ds, cg.phi);
  const StateField achieved = solve_primal(ds, w0, &rep.control).terminal;

  if (target) {
    const double ref = norm_x(*target);
    const double err = norm_x(axpy(-1.0, *target, achieved));
    rep.terminal_residual_norm = ref > 0.0 ? err / ref : err;
  } else {
    const double ref = norm_x(w0);
    const double err = norm_x(achieved);
    rep.terminal_residual_norm = ref > 0.0 ? err / ref : err;
  }
  return rep;
}

}  // namespace

GramianReport synthesize_null_control(const HyperbolicSystem& system, const StateField& w0,
                                      double horizon, const Grid& grid, const HumParams& params) {
  std::vector<std::string> warnings;
  SynthesisInputs in = prepare(system, horizon, grid, params, warnings);
  if (!in_class_b(system.boundary, system.k(), system.m()))
    warnings.push_back("boundary matrix is not in the null-controllability class");
  return run_synthesis(in, w0, nullptr, params, std::move(warnings));
}

GramianReport synthesize_exact_control(const HyperbolicSystem& system, const StateField& w0,
                                       const StateField& w_target, double horizon,
                                       const Grid& grid, const HumParams& params) {
  if (system.m() < system.k())
    throw std::invalid_argument("synthesize_exact_control: requires m >= k");
  std::vector<std::string> warnings;
  SynthesisInputs in = prepare(system, horizon, grid, params, warnings);
  if (!in_class_be(system.boundary, system.k(), system.m()))
    warnings.push_back("boundary matrix is not in the exact-controllability class");
  return run_synthesis(in, w0, &w_target, params, std::move(warnings));
}

namespace {

// Discrete terminal states reachable by the control always satisfy the
// x = 0 reflection constraint at the boundary node, so the node-0
// combinations (a, -B^T a) span an exact nullspace of the Gramian. The
// exact-variant Rayleigh quotient is taken over the complement, which is
// where the continuum inequality lives.
void project_admissible(const DiscreteSystem& ds, StateField& v) {
  const int w = ds.nx + 1;
  Mat gram = Mat::identity(ds.k);
  for (int i = 0; i < ds.k; ++i)
    for (int j = 0; j < ds.k; ++j) {
      double acc = 0.0;
      for (int q = 0; q < ds.m; ++q) acc += ds.boundary.at(i, q) * ds.boundary.at(j, q);
      gram.at(i, j) += acc;
    }
  const Mat inv = gram.inverse();
  std::vector<double> rhs(ds.k, 0.0);
  for (int i = 0; i < ds.k; ++i) {
    rhs[i] = v.v[static_cast<size_t>(i) * w];
    for (int q = 0; q < ds.m; ++q)
      rhs[i] -= ds.boundary.at(i, q) * v.v[static_cast<size_t>(ds.k + q) * w];
  }
  std::vector<double> a(ds.k, 0.0);
  for (int i = 0; i < ds.k; ++i)
    for (int j = 0; j < ds.k; ++j) a[i] += inv.at(i, j) * rhs[j];
  for (int i = 0; i < ds.k; ++i) v.v[static_cast<size_t>(i) * w] -= a[i];
  for (int q = 0; q < ds.m; ++q) {
    double add = 0.0;
    for (int i = 0; i < ds.k; ++i) add += ds.boundary.at(i, q) * a[i];
    v.v[static_cast<size_t>(ds.k + q) * w] += add;
  }
}

}  // namespace

ObservabilityEstimate observability_constant(const DiscreteSystem& ds,
                                             ObservabilityVariant variant,
                                             const ObservabilityParams& params) {
  require_hum_supported(ds, true);
  ObservabilityEstimate est;
  est.horizon = ds.horizon;
  est.method = variant == ObservabilityVariant::Exact ? "inverse-power-gramian"
                                                      : "pencil-power-iteration";

  std::mt19937_64 rng(params.seed);
  StateField v = random_state(ds.n, ds.nx, rng);
  if (variant == ObservabilityVariant::Exact) project_admissible(ds, v);
  {
    const double nrm = norm_x(v);
    if (nrm == 0.0) throw std::runtime_error("observability_constant: degenerate start vector");
    scale(v, 1.0 / nrm);
  }

  double quotient = 0.0;
  bool have_quotient = false;

  const auto denominator = [&](const StateField& x) -> StateField {
    if (variant == ObservabilityVariant::Exact) return x;
    // Null variant: D maps terminal data to the dual state at t = 0 and the
    // free evolution is its weighted transpose, so <Mv, v> = |D v|^2.
    return free_evolution(ds, solve_dual(ds, x).initial);
  };

  for (int it = 0; it < params.power_iters; ++it) {
    const StateField mv = denominator(v);
    const double mnorm = norm_x(mv);
    StateField num = gramian_apply(ds, v, 0.0);
    const double q = inner_x(num, v);
    const double d = variant == ObservabilityVariant::Exact ? 1.0 : inner_x(mv, v);

    const double floored = std::max(d, params.floor);
    const double new_quotient = std::max(q, 0.0) / floored;
    est.residual = have_quotient
                       ? std::fabs(new_quotient - quotient) / std::max(new_quotient, params.floor)
                       : 1.0;
    quotient = new_quotient;
    have_quotient = true;
    est.iterations = it + 1;
    est.degenerate = (d <= params.floor) && (q <= params.floor);
    if (est.residual <= params.inner_tol && it > 0) break;
    if (mnorm <= 1e-200) break;  // denominator map numerically annihilates everything

    CgResult inner = solve_gramian(ds, mv, params.eps, params.inner_tol, params.inner_maxit);
    if (variant == ObservabilityVariant::Exact) project_admissible(ds, inner.phi);
    const double nrm = norm_x(inner.phi);
    if (nrm <= 1e-300) break;
    v = std::move(inner.phi);
    scale(v, 1.0 / nrm);
  }

  est.iteration_capped = est.iterations >= params.power_iters;
  est.constant_estimate = est.degenerate ? 0.0 : quotient;
  return est;
}

ObservabilityEstimate observability_constant(const HyperbolicSystem& system, double horizon,
                                             const Grid& grid, ObservabilityVariant variant,
                                             const ObservabilityParams& params) {
  return observability_constant(DiscreteSystem(system, grid, horizon), variant, params);
}

}  // namespace hyct
