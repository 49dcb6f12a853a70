#pragma once

#include <string>
#include <vector>

#include "hyct/solver.hpp"
#include "hyct/state.hpp"

namespace hyct {

/// Formats a double with 17 significant digits (lossless round-trip).
std::string format_g17(double value);

std::string join_csv_row(const std::vector<std::string>& fields);

/// Terminal-state CSV: column x, then one value column per component.
void write_state_csv(const StateField& state, const std::string& path);

/// Control CSV: column t, then one column per control component.
void write_control_csv(const ControlSignal& control, const std::string& path);

/// Trajectory CSV: one row per sample with columns t, x, component, value.
void write_trajectory_csv(const Trajectory& trajectory, const std::string& path);

}  // namespace hyct
