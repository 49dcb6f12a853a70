#pragma once

#include <optional>
#include <vector>

#include "hyct/grid.hpp"
#include "hyct/state.hpp"
#include "hyct/system.hpp"

namespace hyct {

/// A system frozen onto a space-time grid: node-sampled speeds, Courant
/// numbers and coupling entries, shared by the primal and the dual sweeps
/// so that the two stay exact transposes of each other where they should.
struct DiscreteSystem {
  DiscreteSystem(const HyperbolicSystem& system, const Grid& grid, double horizon);

  int n = 0, k = 0, m = 0;
  CouplingForm form = CouplingForm::WForm;
  bool coupling_zero = true;
  Mat boundary;

  int nx = 0, nt = 0;
  double dx = 0.0, dt = 0.0, horizon = 0.0;

  // Node tables, component-major with rows of length nx+1.
  std::vector<double> nu;      // Courant numbers dt*lambda_i(x_j)/dx
  std::vector<double> lambda;  // speed magnitudes at nodes

  // Coupling sampled at nodes: u-form stores the n x m plus-column block of
  // S, w-form the full n x n matrix C; row-major over (row, col) pairs, each
  // pair holding a contiguous slice of nx+1 node values.
  std::vector<double> coupling_node;
  std::vector<char> coupling_entry_nonzero;

  double nu_at(int i, int j) const { return nu[static_cast<size_t>(i) * (nx + 1) + j]; }
  double lambda_at(int i, int j) const { return lambda[static_cast<size_t>(i) * (nx + 1) + j]; }

  StateField make_state(double time = 0.0) const { return StateField(n, nx, time); }
  ControlSignal make_control() const { return ControlSignal(m, nt, horizon); }
};

struct Trajectory {
  double dt = 0.0;
  int stride = 1;
  std::vector<StateField> frames;
};

struct PrimalOptions {
  bool store_trajectory = false;
  int stride = 1;
};

struct PrimalResult {
  StateField terminal;
  std::optional<Trajectory> trajectory;
};

/// First-order upwind sweep of the primal system from t = 0 to t = T.
/// Minus-family components advect rightward with inflow B w_+(t,0) at x = 0,
/// plus-family components advect leftward with the control as inflow at
/// x = 1; the coupling term is applied by explicit Euler source splitting.
/// Pass control = nullptr for the free evolution.
PrimalResult solve_primal(const DiscreteSystem& ds, const StateField& initial,
                          const ControlSignal* control, const PrimalOptions& opts = {});

StateField free_evolution(const DiscreteSystem& ds, const StateField& initial);

struct DualResult {
  StateField initial;        // dual state at the start of the horizon
  BoundaryTrace trace;       // Sigma_+(1) v_+(., 1) on the time nodes
};

/// Backward sweep of the dual system from terminal data at t = T down to
/// t = 0. For zero coupling this is, by construction, the exact transpose
/// of the primal sweep with respect to the trapezoid inner products (the
/// endpoint nodes then carry weight-compensated values); the nonlocal
/// boundary integral of the u-form coupling is added explicitly with
/// trapezoid quadrature at the current level.
DualResult solve_dual(const DiscreteSystem& ds, const StateField& terminal);

// Convenience wrappers that build the DiscreteSystem on the fly.
PrimalResult solve_primal(const HyperbolicSystem& system, const StateField& initial,
                          const ControlSignal* control, double horizon, const Grid& grid,
                          const PrimalOptions& opts = {});
StateField free_evolution(const HyperbolicSystem& system, const StateField& initial,
                          double horizon, const Grid& grid);
DualResult solve_dual(const HyperbolicSystem& system, const StateField& terminal, double horizon,
                      const Grid& grid);

}  // namespace hyct
