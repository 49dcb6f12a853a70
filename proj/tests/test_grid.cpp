#include <stdexcept>
#include "doctest.h"
#include "hyct/grid.hpp"

using namespace hyct;

TEST_CASE("nominal step follows cfl * dx / max_speed") {
  const SpeedProfile p = SpeedProfile::constant(1, 1, {2.0, 1.0});
  CHECK(cfl_timestep(Grid{100, 0.9}, p) == doctest::Approx(0.0045).epsilon(1e-14));

  SpeedProfile varying;
  varying.n = 2;
  varying.k = 1;
  varying.lambda.emplace_back(std::vector<double>{1.0, 2.0, 3.0});
  varying.lambda.emplace_back(1.0);
  CHECK(cfl_timestep(Grid{200, 0.5}, varying) ==
        doctest::Approx(0.5 * (1.0 / 200) / 3.0).epsilon(1e-14));
}

TEST_CASE("time grid lands exactly on the horizon") {
  const SpeedProfile p = SpeedProfile::constant(1, 1, {1.0, 1.0});
  for (double T : {0.5, 2.4, 1.6, 0.7301}) {
    const TimeGrid tg = make_time_grid(Grid{400, 1.0}, p, T);
    CHECK(tg.nt * tg.dt == doctest::Approx(T).epsilon(1e-15));
    CHECK(tg.dt <= cfl_timestep(Grid{400, 1.0}, p) * (1.0 + 1e-9));
  }
  // Unit Courant number at a matching horizon: dt equals dx bitwise.
  const TimeGrid tg = make_time_grid(Grid{400, 1.0}, p, 0.5);
  CHECK(tg.dt == Grid{400, 1.0}.dx());
  CHECK(tg.nt == 200);
}

TEST_CASE("grid invariants") {
  const SpeedProfile p = SpeedProfile::constant(1, 1, {1.0, 1.0});
  CHECK_THROWS_AS(cfl_timestep(Grid{4, 0.9}, p), std::invalid_argument);
  CHECK_THROWS_AS(cfl_timestep(Grid{100, 0.0}, p), std::invalid_argument);
  CHECK_THROWS_AS(cfl_timestep(Grid{100, 1.5}, p), std::invalid_argument);
  CHECK_THROWS_AS(make_time_grid(Grid{100, 0.9}, p, -1.0), std::invalid_argument);
}
