#pragma once

#include <optional>
#include <vector>

#include "hyct/matrix_class.hpp"
#include "hyct/system.hpp"

namespace hyct {

/// Row-operation factorisation T_N ... T_1 B~ = U produced while checking
/// that the reversed boundary matrix inverse keeps its trailing minors
/// invertible. Each row_ops entry adds a multiple of an earlier row to a
/// later one, so their product is unit lower triangular.
struct GaussianFactors {
  std::vector<Mat> row_ops;
  Mat upper;
};

struct TimeReversal {
  HyperbolicSystem system;   // the reversed system, boundary matrix = b_tilde_inverse
  Mat b_tilde;               // B with both index orders reversed
  Mat b_tilde_inverse;
  std::optional<GaussianFactors> factors;  // present when B is in the exact class
  bool inverse_in_class_b = false;
};

/// Substitution w(t,x) -> w(T-t,x) for square systems (m = k): families swap,
/// component order reverses within each family, and the boundary matrix
/// becomes the inverse of the doubly reversed B. The index map resolves the
/// reversal as B~_{ij} = B_{k+1-i,k+1-j} in 1-based numbering.
///
/// Only w-form coupling survives time reversal (the sign flip and family
/// swap break the u-form structural zeros), so u-form inputs are accepted
/// only with S identically zero and come back as w-form with C = 0.
TimeReversal time_reverse_reduction(const HyperbolicSystem& system,
                                    double det_tol = kDefaultDetTol);

/// Widens a system with m > k to a square 2m-component system by adding
/// m-k very fast minus-family components with speeds (1+m-k-j)/eps,
/// j = 1..m-k. The coupling is zero-padded and the boundary matrix gains an
/// identity block on top. The optimal time of the result converges to the
/// optimal time of the input as eps -> 0+.
HyperbolicSystem augment_system(const HyperbolicSystem& system, double eps);

}  // namespace hyct
