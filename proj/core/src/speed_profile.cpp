#include "hyct/speed_profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyct {

double SpeedProfile::max_speed() const {
  double m = 0.0;
  for (const auto& fn : lambda) m = std::max(m, fn.max_value());
  return m;
}

double SpeedProfile::min_speed() const {
  if (lambda.empty()) return 0.0;
  double m = lambda.front().min_value();
  for (const auto& fn : lambda) m = std::min(m, fn.min_value());
  return m;
}

SpeedProfile SpeedProfile::constant(int k, int m, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != k + m)
    throw std::invalid_argument("SpeedProfile::constant: need k+m speed values");
  SpeedProfile p;
  p.n = k + m;
  p.k = k;
  p.lambda.reserve(p.n);
  for (double v : values) p.lambda.emplace_back(v);
  return p;
}

}  // namespace hyct
