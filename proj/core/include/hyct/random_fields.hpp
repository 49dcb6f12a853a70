#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyct/state.hpp"

namespace hyct {

/// Smooth random function bundle: per component a low-order Fourier sum
/// with seeded Gaussian coefficients decaying like 1/mode. Defined on the
/// unit interval, so the same draw can be sampled on any grid (states in x,
/// controls in t/T) — refinement studies then compare discretisations of
/// one fixed continuum object.
struct FourierField {
  std::vector<double> mean;                  // one per component
  std::vector<std::vector<double>> cos_coeff;
  std::vector<std::vector<double>> sin_coeff;

  int components() const { return static_cast<int>(mean.size()); }
  double eval(int comp, double u) const;
};

FourierField random_fourier_field(int components, int modes, std::mt19937_64& rng);

StateField sample_state(const FourierField& f, int nx, double time = 0.0);
ControlSignal sample_control(const FourierField& f, int nt, double horizon);

StateField random_state(int n, int nx, std::mt19937_64& rng, int modes = 6);
ControlSignal random_control(int m, int nt, double horizon, std::mt19937_64& rng, int modes = 6);

}  // namespace hyct
