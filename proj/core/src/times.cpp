#include "hyct/times.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyct {

double characteristic_time(const SpeedProfile& speeds, int i) {
  if (i < 0 || i >= speeds.n) throw std::out_of_range("characteristic_time: component index");
  const SampledFn& fn = speeds.lambda[i];
  if (fn.is_constant()) {
    if (fn.constant_value() <= 0.0)
      throw std::invalid_argument("characteristic_time: nonpositive speed");
    return 1.0 / fn.constant_value();
  }
  const auto& s = fn.samples();
  const int nq = static_cast<int>(s.size()) - 1;
  const double h = 1.0 / nq;
  double acc = 0.0;
  for (int j = 0; j <= nq; ++j) {
    if (s[j] <= 0.0) throw std::invalid_argument("characteristic_time: nonpositive speed sample");
    const double w = (j == 0 || j == nq) ? 0.5 : 1.0;
    acc += w / s[j];
  }
  return acc * h;
}

TimeReport time_report(const SpeedProfile& speeds) {
  const int k = speeds.k;
  const int m = speeds.m();
  TimeReport r;
  r.tau.resize(speeds.n);
  for (int i = 0; i < speeds.n; ++i) r.tau[i] = characteristic_time(speeds, i);

  // 1-based formula: m >= k uses max{tau_1+tau_{m+1}, ..., tau_k+tau_{m+k}, tau_{k+1}},
  // m < k uses max{tau_{k+1-m}+tau_{k+1}, ..., tau_k+tau_{k+m}}.
  double top = 0.0;
  if (m >= k) {
    top = r.tau[k];  // tau_{k+1}
    for (int i = 1; i <= k; ++i) top = std::max(top, r.tau[i - 1] + r.tau[m + i - 1]);
  } else {
    for (int j = 0; j < m; ++j) top = std::max(top, r.tau[k - m + j] + r.tau[k + j]);
  }
  r.t_opt = top;
  r.russell_time = r.tau[k - 1] + r.tau[k];
  return r;
}

double optimal_time(const SpeedProfile& speeds) { return time_report(speeds).t_opt; }

}  // namespace hyct
