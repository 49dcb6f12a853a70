#pragma once

#include <vector>

#include "hyct/speed_profile.hpp"

namespace hyct {

/// Characteristic exit times tau_i = int_0^1 dx / lambda_i(x), the optimal
/// control time assembled from them, and the classical Russell horizon
/// tau_k + tau_{k+1} that needs no condition on the boundary matrix.
struct TimeReport {
  std::vector<double> tau;
  double t_opt = 0.0;
  double russell_time = 0.0;
};

/// Crossing time of component i (0-based). Composite trapezoid of
/// 1/lambda_i on the sample grid; exact for constant speeds.
double characteristic_time(const SpeedProfile& speeds, int i);

TimeReport time_report(const SpeedProfile& speeds);

double optimal_time(const SpeedProfile& speeds);

}  // namespace hyct
