#pragma once

#include <vector>

namespace hyct {

/// Scalar function on [0,1], stored either as a constant or as uniform
/// samples with linear interpolation between nodes. This is the common
/// representation for characteristic speeds and coupling entries.
class SampledFn {
public:
  SampledFn() = default;
  explicit SampledFn(double constant) : constant_(constant), is_constant_(true) {}
  explicit SampledFn(std::vector<double> samples);

  static SampledFn zero() { return SampledFn(0.0); }

  bool is_constant() const { return is_constant_; }
  bool is_zero() const;
  double constant_value() const { return constant_; }
  const std::vector<double>& samples() const { return samples_; }
  /// Number of sample intervals (0 for constants).
  int intervals() const { return is_constant_ ? 0 : static_cast<int>(samples_.size()) - 1; }

  double operator()(double x) const;

  double min_value() const;
  double max_value() const;
  /// Largest |f(x_{j+1}) - f(x_j)| / dx over the sample grid; 0 for constants.
  double max_difference_quotient() const;

private:
  double constant_ = 0.0;
  bool is_constant_ = true;
  std::vector<double> samples_;
};

}  // namespace hyct
