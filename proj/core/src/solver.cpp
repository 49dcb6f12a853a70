#include "hyct/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyct {

DiscreteSystem::DiscreteSystem(const HyperbolicSystem& system, const Grid& grid, double horizon_) {
  require_valid(system);
  require_valid(grid);

  n = system.n();
  k = system.k();
  m = system.m();
  form = system.coupling.form;
  coupling_zero = system.coupling.is_zero();
  boundary = system.boundary;

  nx = grid.nx;
  dx = grid.dx();
  const TimeGrid tg = make_time_grid(grid, system.speeds, horizon_);
  nt = tg.nt;
  dt = tg.dt;
  horizon = tg.horizon;

  const int w = nx + 1;
  nu.resize(static_cast<size_t>(n) * w);
  lambda.resize(static_cast<size_t>(n) * w);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= nx; ++j) {
      const double l = system.speeds.value(i, static_cast<double>(j) / nx);
      lambda[static_cast<size_t>(i) * w + j] = l;
      // dt was built so that dt*max_speed <= cfl*dx; clamp defensively
      // against the 1e-9 slack allowed in make_time_grid.
      nu[static_cast<size_t>(i) * w + j] = std::min(1.0, dt * l / dx);
    }

  if (!coupling_zero) {
    const int cols = (form == CouplingForm::UForm) ? m : n;
    coupling_node.assign(static_cast<size_t>(n) * cols * w, 0.0);
    coupling_entry_nonzero.assign(static_cast<size_t>(n) * cols, 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < cols; ++c) {
        const SampledFn* fn = nullptr;
        if (form == CouplingForm::UForm)
          fn = (r < k) ? &system.coupling.s_mp_at(r, c) : &system.coupling.s_pp_at(r - k, c);
        else
          fn = &system.coupling.c_at(r, c);
        if (fn->is_zero()) continue;
        coupling_entry_nonzero[static_cast<size_t>(r) * cols + c] = 1;
        double* slot = coupling_node.data() + (static_cast<size_t>(r) * cols + c) * w;
        for (int j = 0; j <= nx; ++j) slot[j] = (*fn)(static_cast<double>(j) / nx);
      }
  }
}

namespace {

// One primal step flat arrays; rows of length w = nx+1 per component.
void primal_step(const DiscreteSystem& ds, const double* uo, double* un,
                 const double* control_new) {
  const int w = ds.nx + 1;
  const int nx = ds.nx;

  // Plus family: leftward transport, inflow (control) at x = 1.
  for (int p = ds.k; p < ds.n; ++p) {
    const double* nup = ds.nu.data() + static_cast<size_t>(p) * w;
    const double* o = uo + static_cast<size_t>(p) * w;
    double* u = un + static_cast<size_t>(p) * w;
    for (int j = 0; j < nx; ++j) u[j] = (1.0 - nup[j]) * o[j] + nup[j] * o[j + 1];
    u[nx] = control_new ? control_new[p - ds.k] : 0.0;
  }
  // Minus family: rightward transport, interior nodes first.
  for (int i = 0; i < ds.k; ++i) {
    const double* nui = ds.nu.data() + static_cast<size_t>(i) * w;
    const double* o = uo + static_cast<size_t>(i) * w;
    double* u = un + static_cast<size_t>(i) * w;
    for (int j = 1; j <= nx; ++j) u[j] = (1.0 - nui[j]) * o[j] + nui[j] * o[j - 1];
  }

  // Explicit source splitting. Minus rows update nodes 1..nx, plus rows
  // 0..nx-1; the inflow nodes carry no source.
  if (!ds.coupling_zero) {
    if (ds.form == CouplingForm::UForm) {
      for (int r = 0; r < ds.n; ++r) {
        const int j0 = (r < ds.k) ? 1 : 0;
        const int j1 = (r < ds.k) ? nx : nx - 1;
        double* u = un + static_cast<size_t>(r) * w;
        for (int q = 0; q < ds.m; ++q) {
          if (!ds.coupling_entry_nonzero[static_cast<size_t>(r) * ds.m + q]) continue;
          const double up0 = uo[static_cast<size_t>(ds.k + q) * w + 0];
          if (up0 == 0.0) continue;
          const double* s = ds.coupling_node.data() + (static_cast<size_t>(r) * ds.m + q) * w;
          const double f = ds.dt * up0;
          for (int j = j0; j <= j1; ++j) u[j] += f * s[j];
        }
      }
    } else {
      for (int r = 0; r < ds.n; ++r) {
        const int j0 = (r < ds.k) ? 1 : 0;
        const int j1 = (r < ds.k) ? nx : nx - 1;
        double* u = un + static_cast<size_t>(r) * w;
        for (int c = 0; c < ds.n; ++c) {
          if (!ds.coupling_entry_nonzero[static_cast<size_t>(r) * ds.n + c]) continue;
          const double* cc = ds.coupling_node.data() + (static_cast<size_t>(r) * ds.n + c) * w;
          const double* oc = uo + static_cast<size_t>(c) * w;
          for (int j = j0; j <= j1; ++j) u[j] += ds.dt * cc[j] * oc[j];
        }
      }
    }
  }

  // Minus inflow from the freshly updated plus values at x = 0.
  for (int i = 0; i < ds.k; ++i) {
    double acc = 0.0;
    for (int q = 0; q < ds.m; ++q)
      acc += ds.boundary.at(i, q) * un[static_cast<size_t>(ds.k + q) * w + 0];
    un[static_cast<size_t>(i) * w + 0] = acc;
  }
}

// One backward dual step. For zero coupling this is the trapezoid-weighted
// transpose of primal_step; the u-form nonlocal term enters through the
// inflow ghost g, the w-form source through C^T at interior nodes.
void dual_step(const DiscreteSystem& ds, const double* wo, double* wn) {
  const int w = ds.nx + 1;
  const int nx = ds.nx;

  // Inflow ghost per plus component: g_q = w_q(0) + (B^T w_-(0))_q plus the
  // scaled boundary integral of the u-form coupling.
  std::vector<double> g(ds.m, 0.0);
  for (int q = 0; q < ds.m; ++q) {
    double acc = wo[static_cast<size_t>(ds.k + q) * w + 0];
    for (int i = 0; i < ds.k; ++i)
      acc += ds.boundary.at(i, q) * wo[static_cast<size_t>(i) * w + 0];
    g[q] = acc;
  }
  if (!ds.coupling_zero && ds.form == CouplingForm::UForm) {
    for (int q = 0; q < ds.m; ++q) {
      double integral = 0.0;
      for (int r = 0; r < ds.n; ++r) {
        if (!ds.coupling_entry_nonzero[static_cast<size_t>(r) * ds.m + q]) continue;
        const double* s = ds.coupling_node.data() + (static_cast<size_t>(r) * ds.m + q) * w;
        const double* orow = wo + static_cast<size_t>(r) * w;
        double acc = 0.5 * (s[0] * orow[0] + s[nx] * orow[nx]);
        for (int j = 1; j < nx; ++j) acc += s[j] * orow[j];
        integral += acc * ds.dx;
      }
      g[q] += 2.0 * (ds.dt / ds.dx) * integral;
    }
  }

  // Minus family moves leftward in backward time; x = 1 is its inflow with
  // zero data (realised as geometric decay of the endpoint node).
  for (int i = 0; i < ds.k; ++i) {
    const double* nui = ds.nu.data() + static_cast<size_t>(i) * w;
    const double* o = wo + static_cast<size_t>(i) * w;
    double* u = wn + static_cast<size_t>(i) * w;
    u[0] = 2.0 * nui[1] * o[1];
    for (int j = 1; j < nx - 1; ++j) u[j] = (1.0 - nui[j]) * o[j] + nui[j + 1] * o[j + 1];
    u[nx - 1] = (1.0 - nui[nx - 1]) * o[nx - 1] + 0.5 * nui[nx] * o[nx];
    u[nx] = (1.0 - nui[nx]) * o[nx];
  }
  // Plus family moves rightward in backward time; inflow at x = 0 through
  // the ghost, outgoing values collected at x = 1 for the trace.
  for (int p = ds.k; p < ds.n; ++p) {
    const double* nup = ds.nu.data() + static_cast<size_t>(p) * w;
    const double* o = wo + static_cast<size_t>(p) * w;
    double* u = wn + static_cast<size_t>(p) * w;
    const double gq = g[p - ds.k];
    u[0] = (1.0 - nup[0]) * gq;
    u[1] = (1.0 - nup[1]) * o[1] + 0.5 * nup[0] * gq;
    for (int j = 2; j < nx; ++j) u[j] = (1.0 - nup[j]) * o[j] + nup[j - 1] * o[j - 1];
    u[nx] = 2.0 * nup[nx - 1] * o[nx - 1];
  }

  if (!ds.coupling_zero && ds.form == CouplingForm::WForm) {
    for (int r = 0; r < ds.n; ++r) {
      const int j0 = (r < ds.k) ? 0 : 1;
      const int j1 = nx - 1;
      double* u = wn + static_cast<size_t>(r) * w;
      for (int c = 0; c < ds.n; ++c) {
        if (!ds.coupling_entry_nonzero[static_cast<size_t>(c) * ds.n + r]) continue;
        const double* cc = ds.coupling_node.data() + (static_cast<size_t>(c) * ds.n + r) * w;
        const double* oc = wo + static_cast<size_t>(c) * w;
        for (int j = j0; j <= j1; ++j) u[j] += ds.dt * cc[j] * oc[j];
      }
    }
  }
}

void check_shapes(const DiscreteSystem& ds, const StateField& s, const char* what) {
  if (s.n != ds.n || s.nx != ds.nx)
    throw std::invalid_argument(std::string(what) + ": state shape does not match the grid");
}

[[noreturn]] void blow_up(double t) {
  throw std::runtime_error("solver: non-finite state detected at t = " + std::to_string(t) +
                           " (blow-up)");
}

}  // namespace

PrimalResult solve_primal(const DiscreteSystem& ds, const StateField& initial,
                          const ControlSignal* control, const PrimalOptions& opts) {
  check_shapes(ds, initial, "solve_primal");
  if (control && (control->m != ds.m || control->nt != ds.nt))
    throw std::invalid_argument("solve_primal: control shape does not match the time grid");
  if (!initial.all_finite()) throw std::invalid_argument("solve_primal: non-finite initial data");

  PrimalResult res;
  res.terminal = initial;
  res.terminal.time = 0.0;
  StateField next = ds.make_state();

  if (opts.store_trajectory) {
    res.trajectory = Trajectory{ds.dt, std::max(1, opts.stride), {}};
    res.trajectory->frames.push_back(res.terminal);
  }

  std::vector<double> ctrl(ds.m, 0.0);
  for (int l = 0; l < ds.nt; ++l) {
    const double* cptr = nullptr;
    if (control) {
      for (int q = 0; q < ds.m; ++q) ctrl[q] = control->at(q, l + 1);
      cptr = ctrl.data();
    }
    primal_step(ds, res.terminal.v.data(), next.v.data(), cptr);
    next.time = ds.dt * (l + 1);
    std::swap(res.terminal, next);
    if ((l & 255) == 255 && !res.terminal.all_finite()) blow_up(res.terminal.time);
    if (res.trajectory && ((l + 1) % res.trajectory->stride == 0 || l + 1 == ds.nt))
      res.trajectory->frames.push_back(res.terminal);
  }
  res.terminal.time = ds.horizon;
  if (!res.terminal.all_finite()) blow_up(ds.horizon);
  return res;
}

StateField free_evolution(const DiscreteSystem& ds, const StateField& initial) {
  return solve_primal(ds, initial, nullptr).terminal;
}

DualResult solve_dual(const DiscreteSystem& ds, const StateField& terminal) {
  check_shapes(ds, terminal, "solve_dual");
  if (!terminal.all_finite()) throw std::invalid_argument("solve_dual: non-finite terminal data");

  DualResult res;
  res.trace = BoundaryTrace(ds.m, ds.nt, ds.horizon);
  const double trace_scale = ds.dx / (2.0 * ds.dt);
  for (int q = 0; q < ds.m; ++q)
    res.trace.at(q, ds.nt) = 2.0 * trace_scale * terminal.at(ds.k + q, ds.nx);

  StateField cur = terminal;
  StateField next = ds.make_state();
  for (int s = 1; s <= ds.nt; ++s) {
    dual_step(ds, cur.v.data(), next.v.data());
    std::swap(cur, next);
    const int l = ds.nt - s;
    if (l > 0)
      for (int q = 0; q < ds.m; ++q) res.trace.at(q, l) = trace_scale * cur.at(ds.k + q, ds.nx);
    if ((s & 255) == 255 && !cur.all_finite()) blow_up(ds.horizon - ds.dt * s);
  }
  cur.time = 0.0;
  if (!cur.all_finite()) blow_up(0.0);
  res.initial = std::move(cur);
  return res;
}

PrimalResult solve_primal(const HyperbolicSystem& system, const StateField& initial,
                          const ControlSignal* control, double horizon, const Grid& grid,
                          const PrimalOptions& opts) {
  return solve_primal(DiscreteSystem(system, grid, horizon), initial, control, opts);
}

StateField free_evolution(const HyperbolicSystem& system, const StateField& initial,
                          double horizon, const Grid& grid) {
  return free_evolution(DiscreteSystem(system, grid, horizon), initial);
}

DualResult solve_dual(const HyperbolicSystem& system, const StateField& terminal, double horizon,
                      const Grid& grid) {
  return solve_dual(DiscreteSystem(system, grid, horizon), terminal);
}

}  // namespace hyct
