#pragma once

#include <vector>

#include "hyct/sampled_fn.hpp"

namespace hyct {

/// The n characteristic speed magnitudes of the system
///
///   d/dt w = Sigma(x) d/dx w + coupling,
///   Sigma(x) = diag(-s_1(x), ..., -s_k(x), s_{k+1}(x), ..., s_n(x)),
///
/// stored as positive functions s_i on [0,1]. Components 0..k-1 form the
/// minus family (speeds decreasing), components k..n-1 the plus family
/// (speeds increasing). All public indices are 0-based; the classical
/// component numbering is this index plus one.
struct SpeedProfile {
  int n = 0;
  int k = 0;
  std::vector<SampledFn> lambda;

  int m() const { return n - k; }
  bool is_minus(int i) const { return i < k; }

  double value(int i, double x) const { return lambda[i](x); }
  double max_speed() const;
  double min_speed() const;

  static SpeedProfile constant(int k, int m, const std::vector<double>& values);
};

}  // namespace hyct
