#include "hyct/sampled_fn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyct {

SampledFn::SampledFn(std::vector<double> samples)
    : is_constant_(false), samples_(std::move(samples)) {
  if (samples_.size() < 2)
    throw std::invalid_argument("SampledFn: need at least two samples");
}

bool SampledFn::is_zero() const {
  if (is_constant_) return constant_ == 0.0;
  return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v == 0.0; });
}

double SampledFn::operator()(double x) const {
  if (is_constant_) return constant_;
  const int nq = static_cast<int>(samples_.size()) - 1;
  double u = x * nq;
  if (u <= 0.0) return samples_.front();
  if (u >= nq) return samples_.back();
  const int j = static_cast<int>(u);
  const double t = u - j;
  return samples_[j] + t * (samples_[j + 1] - samples_[j]);
}

double SampledFn::min_value() const {
  if (is_constant_) return constant_;
  return *std::min_element(samples_.begin(), samples_.end());
}

double SampledFn::max_value() const {
  if (is_constant_) return constant_;
  return *std::max_element(samples_.begin(), samples_.end());
}

double SampledFn::max_difference_quotient() const {
  if (is_constant_) return 0.0;
  const int nq = static_cast<int>(samples_.size()) - 1;
  double m = 0.0;
  for (int j = 0; j < nq; ++j)
    m = std::max(m, std::fabs(samples_[j + 1] - samples_[j]) * nq);
  return m;
}

}  // namespace hyct
