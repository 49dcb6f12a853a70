#pragma once

#include "hyct/speed_profile.hpp"

namespace hyct {

/// Uniform spatial grid on [0,1] with nodes x_j = j/nx, j = 0..nx.
struct Grid {
  int nx = 0;
  double cfl = 0.9;

  double dx() const { return 1.0 / nx; }
};

/// Uniform time grid on [0,T]. The nominal step cfl*dx/max_speed is shrunk
/// uniformly so that t = T lands exactly on node nt.
struct TimeGrid {
  int nt = 0;
  double dt = 0.0;
  double horizon = 0.0;
};

/// Largest stable explicit step: cfl * dx / (max speed over all components
/// and sample points).
double cfl_timestep(const Grid& grid, const SpeedProfile& speeds);

TimeGrid make_time_grid(const Grid& grid, const SpeedProfile& speeds, double horizon);

void require_valid(const Grid& grid);

}  // namespace hyct
