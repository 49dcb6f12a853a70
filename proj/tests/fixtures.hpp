#pragma once

// The canonical fixture systems every pinned number in the suites refers
// to. The calibration system is the 2x2 unit-speed reflector; the wide
// fixture is its k = 1, m = 2 companion used by the exact-control and
// augmentation runs.

#include <cmath>

#include "hyct/system.hpp"

namespace hyct::fixtures {

constexpr double kPi = 3.14159265358979323846264338327950288;

/// 0.5 * (1 - cos(2 pi x)): the standard smooth bump with zero endpoints.
inline double bump(double x) {
  if (x < 0.0 || x > 1.0) return 0.0;
  return 0.5 * (1.0 - std::cos(2.0 * kPi * x));
}

/// n = 2, k = m = 1, unit speeds, zero u-form coupling, B = [1].
/// tau = (1, 1), T_opt = 2.
inline HyperbolicSystem calibration() {
  HyperbolicSystem sys;
  sys.speeds = SpeedProfile::constant(1, 1, {1.0, 1.0});
  sys.coupling = CouplingField::zero_u(2, 1);
  sys.boundary = Mat(1, 1, {1.0});
  return sys;
}

/// Calibration with a constant nonzero S_-+ block (still u-form legal).
inline HyperbolicSystem calibration_with_coupling(double s_mp = 0.8) {
  HyperbolicSystem sys = calibration();
  sys.coupling = CouplingField::u_constant(2, 1, {s_mp}, {0.0});
  return sys;
}

/// Initial state of the calibration runs: the bump on the plus component.
inline double calibration_initial(int comp, double x) { return comp == 1 ? bump(x) : 0.0; }

/// n = 3, k = 1, m = 2, speeds (1, 1, 2), zero coupling, B = [0.5, 1] in the
/// exact-controllability class. tau = (1, 1, 0.5), T_opt = 1.5.
inline HyperbolicSystem wide_fixture() {
  HyperbolicSystem sys;
  sys.speeds = SpeedProfile::constant(1, 2, {1.0, 1.0, 2.0});
  sys.coupling = CouplingField::zero_u(3, 1);
  sys.boundary = Mat(1, 2, {0.5, 1.0});
  return sys;
}

}  // namespace hyct::fixtures
