#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyct/hum.hpp"
#include "hyct/system.hpp"

namespace hyct {

/// Outcome of one scripted study: a CSV-shaped table plus named scalars,
/// with enough metadata (system fingerprint, seed, grid parameters) to
/// reproduce the run bit for bit. Wall-clock time is recorded for the .meta
/// file but is not part of the reproducibility contract.
struct StudyRecord {
  std::string name;
  std::string fingerprint;
  std::string params_echo;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  bool passed = true;
  std::vector<std::string> notes;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, double> scalars;
};

/// Measures the relative duality gap |<F_T U, v>_x - <U, F_T* v>_t| /
/// (|U| |v|) over seeded smooth random pairs, one row per grid, and fits the
/// empirical convergence order between consecutive grids. Fails when the
/// gaps do not decrease or the mean order drops below 0.8. trials = 0 is
/// flagged and leaves the rate undefined.
StudyRecord adjoint_consistency_study(const HyperbolicSystem& system, double horizon,
                                      double cfl, const std::vector<int>& nx_list, int trials,
                                      std::uint64_t seed);

/// Observability-constant scan over ascending horizons; records each
/// estimate, locates the knee (largest consecutive ratio) relative to the
/// optimal time and checks monotonicity up to the estimator slack.
StudyRecord observability_scan(const HyperbolicSystem& system, const std::vector<double>& horizons,
                               const Grid& grid, ObservabilityVariant variant,
                               const ObservabilityParams& params);

/// Optimal time against the classical Russell horizon tau_k + tau_{k+1};
/// asserts t_opt <= tau_k + tau_{k+1} for every system in the list.
StudyRecord russell_comparison(const std::vector<HyperbolicSystem>& systems);

struct NullControlConvergenceOptions {
  std::vector<int> nx_list;
  std::vector<double> eps_list;
  double cfl = 0.9;
  double cg_tol = 1e-8;
  int cg_maxit = 500;
  /// Optional horizon below the optimal time added as a negative control;
  /// its residual must stay at or above negative_control_min_residual.
  std::optional<double> negative_control_horizon;
  double negative_control_min_residual = 0.0;
};

/// Terminal-residual matrix of HUM null control over (nx, eps); asserts the
/// residual does not grow along grid refinement at fixed eps nor along
/// eps decrease on the finest grid (plateaus allowed within slack).
StudyRecord null_control_convergence(const HyperbolicSystem& system,
                                     const std::function<double(int, double)>& initial_data,
                                     double horizon,
                                     const NullControlConvergenceOptions& options);

/// Gap |t_opt(augmented(eps)) - t_opt| per eps; asserts the gap never
/// exceeds 2*eps and shrinks with eps. Epsilons too large for the speed
/// ordering are flagged and excluded. Also reports the least-squares slope
/// of gap against eps.
StudyRecord augmentation_limit_study(const HyperbolicSystem& system,
                                     const std::vector<double>& eps_list);

/// Writes <name>.csv and <name>.meta into out_dir (created if needed).
void write_study(const StudyRecord& record, const std::string& out_dir);

}  // namespace hyct
