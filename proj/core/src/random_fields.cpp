#include "hyct/random_fields.hpp"

#include <cmath>

namespace hyct {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double FourierField::eval(int comp, double u) const {
  double acc = mean[comp];
  const auto& cc = cos_coeff[comp];
  const auto& sc = sin_coeff[comp];
  for (size_t m = 0; m < cc.size(); ++m) {
    const double arg = kTwoPi * static_cast<double>(m + 1) * u;
    acc += cc[m] * std::cos(arg) + sc[m] * std::sin(arg);
  }
  return acc;
}

FourierField random_fourier_field(int components, int modes, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  FourierField f;
  f.mean.resize(components);
  f.cos_coeff.assign(components, std::vector<double>(modes));
  f.sin_coeff.assign(components, std::vector<double>(modes));
  for (int c = 0; c < components; ++c) {
    f.mean[c] = gauss(rng);
    for (int m = 0; m < modes; ++m) {
      const double scale = 1.0 / (m + 1);
      f.cos_coeff[c][m] = scale * gauss(rng);
      f.sin_coeff[c][m] = scale * gauss(rng);
    }
  }
  return f;
}

StateField sample_state(const FourierField& f, int nx, double time) {
  return StateField::sample(f.components(), nx,
                            [&](int i, double x) { return f.eval(i, x); }, time);
}

ControlSignal sample_control(const FourierField& f, int nt, double horizon) {
  return ControlSignal::sample(f.components(), nt, horizon,
                               [&](int q, double t) { return f.eval(q, t / horizon); });
}

StateField random_state(int n, int nx, std::mt19937_64& rng, int modes) {
  return sample_state(random_fourier_field(n, modes, rng), nx);
}

ControlSignal random_control(int m, int nt, double horizon, std::mt19937_64& rng, int modes) {
  return sample_control(random_fourier_field(m, modes, rng), nt, horizon);
}

}  // namespace hyct
