#include "hyct/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace hyct {

void require_valid(const Grid& grid) {
  if (grid.nx < 8) throw std::invalid_argument("Grid: nx must be at least 8");
  if (!(grid.cfl > 0.0) || grid.cfl > 1.0)
    throw std::invalid_argument("Grid: cfl must lie in (0, 1]");
}

double cfl_timestep(const Grid& grid, const SpeedProfile& speeds) {
  require_valid(grid);
  const double vmax = speeds.max_speed();
  if (!(vmax > 0.0)) throw std::invalid_argument("cfl_timestep: nonpositive maximal speed");
  return grid.cfl * grid.dx() / vmax;
}

TimeGrid make_time_grid(const Grid& grid, const SpeedProfile& speeds, double horizon) {
  if (!(horizon > 0.0)) throw std::invalid_argument("make_time_grid: horizon must be positive");
  const double dt_nominal = cfl_timestep(grid, speeds);
  // Guard against 800.0000000001-style ceilings when T is a multiple of dt.
  long nt = static_cast<long>(std::ceil(horizon / dt_nominal - 1e-9));
  if (nt < 1) nt = 1;
  double dt = horizon / static_cast<double>(nt);
  if (dt > dt_nominal * (1.0 + 1e-9)) {
    ++nt;
    dt = horizon / static_cast<double>(nt);
  }
  TimeGrid tg;
  tg.nt = static_cast<int>(nt);
  tg.dt = dt;
  tg.horizon = horizon;
  return tg;
}

}  // namespace hyct
