// Command line front end: parse a system definition, dispatch to the
// model/solver/hum/study layers, emit CSV plus a short human-readable
// summary. Exit status 0 on success, 1 on run failure, 2 on usage/config
// errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hyct/config.hpp"
#include "hyct/csv.hpp"
#include "hyct/hum.hpp"
#include "hyct/matrix_class.hpp"
#include "hyct/reductions.hpp"
#include "hyct/solver.hpp"
#include "hyct/studies.hpp"
#include "hyct/times.hpp"

using namespace hyct;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::optional<int> nx;
  std::optional<double> cfl;
  std::optional<double> horizon;
  std::optional<double> eps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  bool store_trajectory = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_horizon = false) {
  cmd->add_option("--config", args.config_path, "system definition file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_dir, "output directory (default from config)");
  cmd->add_option("--nx", args.nx, "override grid cell count");
  cmd->add_option("--cfl", args.cfl, "override Courant number");
  auto* t = cmd->add_option("--T", args.horizon, "override horizon");
  if (needs_horizon) (void)t;
  cmd->add_option("--eps", args.eps, "override HUM regularisation weight");
  cmd->add_option("--seed", args.seed, "override random seed");
  cmd->add_option("--mode", args.mode, "control mode: null | exact")
      ->check(CLI::IsMember({"null", "exact"}));
  cmd->add_flag("--store-trajectory", args.store_trajectory, "store and export the trajectory");
}

ParsedConfig load(const CommonArgs& args) {
  ParsedConfig pc = parse_config_file(args.config_path);
  if (!pc.ok()) {
    for (const auto& e : pc.errors)
      std::cerr << args.config_path << ":" << e.line << ": error: " << e.message << "\n";
    std::exit(2);
  }
  if (args.nx) pc.run.grid.nx = *args.nx;
  if (args.cfl) pc.run.grid.cfl = *args.cfl;
  if (args.horizon) pc.run.horizon = *args.horizon;
  if (args.eps) pc.run.hum.eps = *args.eps;
  if (args.seed) pc.run.seed = *args.seed;
  if (args.mode) pc.run.mode = *args.mode;
  if (!args.out_dir.empty()) pc.run.out_dir = args.out_dir;
  if (args.store_trajectory) pc.run.store_trajectory = true;
  std::filesystem::create_directories(pc.run.out_dir);
  return pc;
}

double bump(double x) {
  if (x < 0.0 || x > 1.0) return 0.0;
  return 0.5 * (1.0 - std::cos(2.0 * kPi * x));
}

// State specs: "zero", "bump C" or "bump C SHIFT" with a 1-based component.
StateField state_from_spec(const std::string& spec, const HyperbolicSystem& sys, int nx,
                           double time) {
  std::istringstream is(spec.empty() ? std::string("bump") : spec);
  std::string kind;
  is >> kind;
  if (kind == "zero") return StateField(sys.n(), nx, time);
  if (kind != "bump") throw std::invalid_argument("unknown state spec '" + spec + "'");
  int comp = sys.k() + 1;  // default: first plus component
  double shift = 0.0;
  if (int c = 0; is >> c) comp = c;
  if (double s = 0.0; is >> s) shift = s;
  if (comp < 1 || comp > sys.n())
    throw std::invalid_argument("state spec component out of range in '" + spec + "'");
  return StateField::sample(
      sys.n(), nx,
      [&](int i, double x) { return i == comp - 1 ? bump(x - shift) : 0.0; }, time);
}

void write_report_csv(const GramianReport& rep, const std::string& path) {
  std::ofstream os(path);
  os << "quantity,value\n";
  os << "cg_iterations," << rep.cg_iterations << "\n";
  os << "cg_residual," << format_g17(rep.cg_residual) << "\n";
  os << "cg_converged," << (rep.cg_converged ? 1 : 0) << "\n";
  os << "terminal_residual_norm," << format_g17(rep.terminal_residual_norm) << "\n";
  os << "eps," << format_g17(rep.eps) << "\n";
  os << "warnings," << rep.warnings.size() << "\n";
}

int cmd_times(const CommonArgs& args) {
  const ParsedConfig pc = load(args);
  const TimeReport r = time_report(pc.system.speeds);
  std::ofstream os(std::filesystem::path(pc.run.out_dir) / "times.csv");
  os << "quantity,value\n";
  for (size_t i = 0; i < r.tau.size(); ++i)
    os << "tau" << (i + 1) << "," << format_g17(r.tau[i]) << "\n";
  os << "t_opt," << format_g17(r.t_opt) << "\n";
  os << "russell_time," << format_g17(r.russell_time) << "\n";
  std::cout << "tau =";
  for (double t : r.tau) std::cout << " " << format_g17(t);
  std::cout << "\nt_opt = " << format_g17(r.t_opt)
            << "\nrussell_time = " << format_g17(r.russell_time) << "\n";
  return 0;
}

int cmd_check_b(const CommonArgs& args) {
  const ParsedConfig pc = load(args);
  const Mat& b = pc.system.boundary;
  const int k = pc.system.k(), m = pc.system.m();

  const auto first_bad_minor = [&](int imax) -> int {
    for (int i = 1; i <= imax; ++i)
      if (!trailing_minors_invertible(b, i)) return i;
    return 0;
  };

  const bool in_b = in_class_b(b, k, m);
  std::cout << "class B: " << (in_b ? "member" : "not a member");
  if (!in_b) std::cout << " (trailing " << first_bad_minor(std::min(k, m - 1)) << "x"
                       << first_bad_minor(std::min(k, m - 1)) << " singular)";
  std::cout << "\n";

  std::ofstream os(std::filesystem::path(pc.run.out_dir) / "check_b.csv");
  os << "class,member\n";
  os << "B," << (in_b ? 1 : 0) << "\n";
  if (m >= k) {
    const bool in_be = in_class_be(b, k, m);
    std::cout << "class B_e: " << (in_be ? "member" : "not a member");
    if (!in_be) std::cout << " (trailing " << first_bad_minor(k) << "x" << first_bad_minor(k)
                          << " singular)";
    std::cout << "\n";
    os << "B_e," << (in_be ? 1 : 0) << "\n";
  }
  return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& initial_flag) {
  const ParsedConfig pc = load(args);
  const std::string spec = initial_flag.empty() ? pc.run.initial_spec : initial_flag;
  const StateField w0 = state_from_spec(spec, pc.system, pc.run.grid.nx, 0.0);
  PrimalOptions opts;
  opts.store_trajectory = pc.run.store_trajectory;
  opts.stride = std::max(1, pc.run.grid.nx / 100);
  const DiscreteSystem ds(pc.system, pc.run.grid, pc.run.horizon);
  const PrimalResult res = solve_primal(ds, w0, nullptr, opts);
  const std::filesystem::path out(pc.run.out_dir);
  write_state_csv(res.terminal, (out / "terminal.csv").string());
  if (res.trajectory) write_trajectory_csv(*res.trajectory, (out / "trajectory.csv").string());
  std::cout << "terminal L2 norm = " << format_g17(norm_x(res.terminal)) << "\n";
  std::cout << "wrote " << (out / "terminal.csv").string() << "\n";
  return 0;
}

int cmd_control(const CommonArgs& args, const std::string& initial_flag,
                const std::string& target_flag) {
  const ParsedConfig pc = load(args);
  HumParams hp;
  hp.eps = pc.run.hum.eps;
  hp.eps_relative = pc.run.hum.eps_relative;
  hp.cg_tol = pc.run.hum.cg_tol;
  hp.cg_maxit = pc.run.hum.cg_maxit;

  const std::string ispec = initial_flag.empty() ? pc.run.initial_spec : initial_flag;
  const StateField w0 = state_from_spec(ispec, pc.system, pc.run.grid.nx, 0.0);

  GramianReport rep;
  if (pc.run.mode == "exact") {
    const std::string tspec = target_flag.empty() ? pc.run.target_spec : target_flag;
    const StateField target =
        state_from_spec(tspec, pc.system, pc.run.grid.nx, pc.run.horizon);
    rep = synthesize_exact_control(pc.system, w0, target, pc.run.horizon, pc.run.grid, hp);
  } else {
    rep = synthesize_null_control(pc.system, w0, pc.run.horizon, pc.run.grid, hp);
  }

  const std::filesystem::path out(pc.run.out_dir);
  write_control_csv(rep.control, (out / "control.csv").string());
  write_report_csv(rep, (out / "report.csv").string());
  std::cout << "mode = " << pc.run.mode << "\n";
  std::cout << "cg iterations = " << rep.cg_iterations
            << ", cg residual = " << format_g17(rep.cg_residual) << "\n";
  std::cout << "terminal residual = " << format_g17(rep.terminal_residual_norm) << "\n";
  for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

int cmd_observability(const CommonArgs& args, const std::string& variant) {
  const ParsedConfig pc = load(args);
  ObservabilityParams params;
  params.eps = pc.run.hum.eps;
  params.seed = pc.run.seed;
  const ObservabilityVariant var =
      variant == "exact" ? ObservabilityVariant::Exact : ObservabilityVariant::Null;
  const ObservabilityEstimate est =
      observability_constant(pc.system, pc.run.horizon, pc.run.grid, var, params);
  std::ofstream os(std::filesystem::path(pc.run.out_dir) / "observability.csv");
  os << "T,constant_estimate,iterations,residual\n";
  os << format_g17(est.horizon) << "," << format_g17(est.constant_estimate) << ","
     << est.iterations << "," << format_g17(est.residual) << "\n";
  std::cout << "T = " << format_g17(est.horizon)
            << ", constant estimate = " << format_g17(est.constant_estimate)
            << " (method " << est.method << ", " << est.iterations << " iterations)\n";
  if (est.degenerate) std::cout << "note: denominator map has a numerical kernel\n";
  return 0;
}

std::vector<double> default_scan_factors() { return {0.5, 0.8, 0.9, 1.1, 1.2, 1.5}; }

int cmd_scan(const CommonArgs& args, std::vector<double> factors, const std::string& variant) {
  const ParsedConfig pc = load(args);
  if (factors.empty()) factors = default_scan_factors();
  const double t_opt = optimal_time(pc.system.speeds);
  std::vector<double> horizons;
  for (double f : factors) horizons.push_back(f * t_opt);
  ObservabilityParams params;
  params.eps = pc.run.hum.eps;
  params.seed = pc.run.seed;
  const ObservabilityVariant var =
      variant == "exact" ? ObservabilityVariant::Exact : ObservabilityVariant::Null;
  const StudyRecord rec = observability_scan(pc.system, horizons, pc.run.grid, var, params);
  write_study(rec, pc.run.out_dir);
  std::cout << "scan of " << horizons.size() << " horizons, t_opt = " << format_g17(t_opt)
            << "\n";
  if (rec.scalars.count("knee_ratio"))
    std::cout << "knee between T = " << format_g17(rec.scalars.at("knee_T_low")) << " and "
              << format_g17(rec.scalars.at("knee_T_high"))
              << " (ratio " << format_g17(rec.scalars.at("knee_ratio")) << ")\n";
  for (const auto& n : rec.notes) std::cout << "note: " << n << "\n";
  return rec.passed ? 0 : 1;
}

int cmd_duality(const CommonArgs& args, std::vector<int> nx_list, int trials) {
  const ParsedConfig pc = load(args);
  if (nx_list.empty())
    nx_list = {pc.run.grid.nx / 4, pc.run.grid.nx / 2, pc.run.grid.nx};
  const StudyRecord rec = adjoint_consistency_study(pc.system, pc.run.horizon, pc.run.grid.cfl,
                                                    nx_list, trials, pc.run.seed);
  write_study(rec, pc.run.out_dir);
  for (const auto& row : rec.rows)
    std::cout << "nx = " << static_cast<int>(row[0]) << ": max gap = " << format_g17(row[1])
              << "\n";
  if (rec.scalars.count("mean_order"))
    std::cout << "mean empirical order = " << format_g17(rec.scalars.at("mean_order")) << "\n";
  for (const auto& n : rec.notes) std::cout << "note: " << n << "\n";
  return rec.passed ? 0 : 1;
}

int cmd_study(const CommonArgs& args, const std::string& name) {
  const ParsedConfig pc = load(args);
  StudyRecord rec;
  if (name == "adjoint") {
    rec = adjoint_consistency_study(pc.system, pc.run.horizon, pc.run.grid.cfl,
                                    {50, 100, 200, 400}, 50, pc.run.seed);
  } else if (name == "scan") {
    return cmd_scan(args, {}, "null");
  } else if (name == "russell") {
    std::vector<HyperbolicSystem> systems{pc.system};
    std::mt19937_64 rng(pc.run.seed);
    std::uniform_real_distribution<double> uni(0.25, 4.0);
    for (int rep = 0; rep < 100; ++rep) {
      const int k = 1 + static_cast<int>(rng() % 3);
      const int m = 1 + static_cast<int>(rng() % 3);
      std::vector<double> minus(k), plus(m);
      for (double& v : minus) v = uni(rng);
      for (double& v : plus) v = uni(rng);
      std::sort(minus.begin(), minus.end(), std::greater<>());
      std::sort(plus.begin(), plus.end());
      for (int i = 1; i < k; ++i) minus[i] = std::min(minus[i], minus[i - 1] - 1e-3);
      for (int i = 1; i < m; ++i) plus[i] = std::max(plus[i], plus[i - 1] + 1e-3);
      std::vector<double> all = minus;
      all.insert(all.end(), plus.begin(), plus.end());
      HyperbolicSystem sys;
      sys.speeds = SpeedProfile::constant(k, m, all);
      sys.coupling = CouplingField::zero_w(k + m, k);
      sys.boundary = Mat(k, m);
      systems.push_back(std::move(sys));
    }
    rec = russell_comparison(systems);
  } else if (name == "null-convergence") {
    NullControlConvergenceOptions opts;
    opts.nx_list = {100, 200, 400};
    opts.eps_list = {1e-4, 1e-6};
    opts.cfl = pc.run.grid.cfl;
    opts.cg_tol = pc.run.hum.cg_tol;
    opts.cg_maxit = pc.run.hum.cg_maxit;
    // Resolve the initial-state spec once on a probe grid, then evaluate by
    // interpolation-free resampling inside the study.
    std::istringstream is(pc.run.initial_spec.empty() ? std::string("bump")
                                                      : pc.run.initial_spec);
    std::string kind;
    int comp = pc.system.k() + 1;
    double shift = 0.0;
    is >> kind;
    if (int c = 0; is >> c) comp = c;
    if (double s = 0.0; is >> s) shift = s;
    if (kind != "zero" && kind != "bump")
      throw std::invalid_argument("unknown state spec '" + pc.run.initial_spec + "'");
    const bool zero = kind == "zero";
    rec = null_control_convergence(
        pc.system,
        [zero, comp, shift](int i, double x) {
          return (!zero && i == comp - 1) ? bump(x - shift) : 0.0;
        },
        pc.run.horizon, opts);
  } else if (name == "augmentation") {
    rec = augmentation_limit_study(pc.system, {0.1, 0.01, 0.001});
  } else {
    std::cerr << "unknown study '" << name
              << "' (expected adjoint | scan | russell | null-convergence | augmentation)\n";
    return 2;
  }
  write_study(rec, pc.run.out_dir);
  std::cout << "study " << rec.name << ": " << (rec.passed ? "passed" : "FAILED") << ", "
            << rec.rows.size() << " rows -> " << pc.run.out_dir << "\n";
  for (const auto& n : rec.notes) std::cout << "note: " << n << "\n";
  return rec.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical controllability toolkit for 1-D linear hyperbolic systems"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string initial_flag, target_flag, variant = "null", study_name;
  std::vector<double> scan_factors;
  std::vector<int> nx_list;
  int trials = 50;

  auto* times = app.add_subcommand("times", "characteristic and optimal control times");
  add_common(times, args);

  auto* checkb = app.add_subcommand("check-b", "boundary-matrix class membership");
  add_common(checkb, args);

  auto* simulate = app.add_subcommand("simulate", "free evolution of the primal system");
  add_common(simulate, args, true);
  simulate->add_option("--initial", initial_flag, "initial state spec (zero | bump C [SHIFT])");

  auto* control = app.add_subcommand("control", "HUM boundary control synthesis");
  add_common(control, args, true);
  control->add_option("--initial", initial_flag, "initial state spec");
  control->add_option("--target", target_flag, "target state spec (exact mode)");

  auto* obs = app.add_subcommand("observability", "observability-constant estimate");
  add_common(obs, args, true);
  obs->add_option("--variant", variant, "null | exact")
      ->check(CLI::IsMember({"null", "exact"}));

  auto* scan = app.add_subcommand("scan", "observability scan across horizons");
  add_common(scan, args);
  scan->add_option("--factors", scan_factors, "horizon factors relative to t_opt");
  scan->add_option("--variant", variant, "null | exact")
      ->check(CLI::IsMember({"null", "exact"}));

  auto* duality = app.add_subcommand("duality", "adjoint-consistency study");
  add_common(duality, args, true);
  duality->add_option("--nx-list", nx_list, "grids to test");
  duality->add_option("--trials", trials, "random pairs per grid");

  auto* study = app.add_subcommand("study", "run a named study");
  add_common(study, args);
  study->add_option("name", study_name, "adjoint | scan | russell | null-convergence | augmentation")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (times->parsed()) return cmd_times(args);
    if (checkb->parsed()) return cmd_check_b(args);
    if (simulate->parsed()) return cmd_simulate(args, initial_flag);
    if (control->parsed()) return cmd_control(args, initial_flag, target_flag);
    if (obs->parsed()) return cmd_observability(args, variant);
    if (scan->parsed()) return cmd_scan(args, scan_factors, variant);
    if (duality->parsed()) return cmd_duality(args, nx_list, trials);
    if (study->parsed()) return cmd_study(args, study_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
