#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyct/grid.hpp"
#include "hyct/system.hpp"

namespace hyct {

struct HumConfig {
  double eps = 1e-6;
  bool eps_relative = false;
  double cg_tol = 1e-8;
  int cg_maxit = 500;
};

struct RunConfig {
  std::string system_path;  // set by the CLI, not the file itself
  std::string command;
  Grid grid{400, 0.9};
  double horizon = 1.0;
  HumConfig hum;
  std::string out_dir = ".";
  std::uint64_t seed = 20200704;
  bool store_trajectory = false;
  std::string mode = "null";  // control mode: null | exact
  // State specs for the CLI: "zero" or "bump C [SHIFT]" with a 1-based
  // component; empty means the front end default (bump on the first plus
  // component).
  std::string initial_spec;
  std::string target_spec;
};

struct ParseError {
  int line = 0;
  std::string message;
};

struct ParsedConfig {
  RunConfig run;
  HyperbolicSystem system;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

/// Parses the flat key = value section format:
///
///   [system]  n, k, m, lambda<i> (scalar or bracketed samples),
///             coupling = w | u, C / S_mp / S_pp (row-major bracketed,
///             optional, default zero), B (row-major, required)
///   [grid]    nx, cfl
///   [hum]     eps, eps_relative, cg_tol, cg_maxit
///   [run]     T, seed, out, mode, store_trajectory
///
/// All failures are collected with their line numbers; the system
/// invariants are checked as part of parsing.
ParsedConfig parse_config(const std::string& text);

ParsedConfig parse_config_file(const std::string& path);

/// Canonical text form; parse_config(serialize_config(...)) reproduces the
/// same objects. Floating-point values are written with 17 significant
/// digits so the round-trip is bit exact.
std::string serialize_config(const RunConfig& run, const HyperbolicSystem& system);

/// Just the [system] section (also the fingerprint payload for studies).
std::string serialize_system_section(const HyperbolicSystem& system);

}  // namespace hyct
