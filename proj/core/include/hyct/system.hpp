#pragma once

#include <string>
#include <vector>

#include "hyct/mat.hpp"
#include "hyct/sampled_fn.hpp"
#include "hyct/speed_profile.hpp"

namespace hyct {

enum class CouplingForm { WForm, UForm };

/// Zero-order coupling of the system, in one of two shapes:
///
///  - w-form: a full n x n matrix C(x) acting on the local state,
///      d/dt w = Sigma d/dx w + C(x) w(t,x).
///  - u-form: a matrix S(x) acting on the plus-family boundary values,
///      d/dt u = Sigma d/dx u + S(x) u(t,0),
///    where only the plus columns of S are nonzero and the plus/plus
///    block is strictly upper triangular.
struct CouplingField {
  CouplingForm form = CouplingForm::WForm;
  int n = 0;
  int k = 0;

  /// w-form entries, row-major n x n. Empty in u-form.
  std::vector<SampledFn> c;
  /// u-form blocks: S_mp is k x m (minus rows, plus columns), S_pp is
  /// m x m (plus rows, plus columns). Empty in w-form.
  std::vector<SampledFn> s_mp;
  std::vector<SampledFn> s_pp;

  int m() const { return n - k; }
  bool is_zero() const;

  const SampledFn& c_at(int i, int j) const { return c[i * n + j]; }
  const SampledFn& s_mp_at(int i, int q) const { return s_mp[i * m() + q]; }
  const SampledFn& s_pp_at(int p, int q) const { return s_pp[p * m() + q]; }

  static CouplingField zero_w(int n, int k);
  static CouplingField zero_u(int n, int k);
  static CouplingField w_constant(int n, int k, const std::vector<double>& c_row_major);
  static CouplingField u_constant(int n, int k, const std::vector<double>& s_mp_row_major,
                                  const std::vector<double>& s_pp_row_major);
};

/// Complete problem datum: speeds, coupling and the constant boundary
/// reflection matrix B of w_-(t,0) = B w_+(t,0). Plain aggregate; use
/// validate() to check the invariants.
struct HyperbolicSystem {
  SpeedProfile speeds;
  CouplingField coupling;
  Mat boundary;  // k x m

  int n() const { return speeds.n; }
  int k() const { return speeds.k; }
  int m() const { return speeds.m(); }
};

struct ValidationLimits {
  double ordering_gap = 1e-9;   // minimal strict gap between adjacent speeds
  double lipschitz_max = 1e6;   // bound on |d lambda / dx| difference quotients
  double coupling_max = 1e6;    // bound on coupling entries
};

struct Diagnostic {
  std::string code;
  std::string message;
};

/// Returns the list of violated invariants; empty if the system is valid.
/// Never throws, even on dimensionally inconsistent data.
std::vector<Diagnostic> validate(const HyperbolicSystem& system,
                                 const ValidationLimits& limits = {});

/// Throws std::invalid_argument listing all diagnostics if the system is invalid.
void require_valid(const HyperbolicSystem& system, const ValidationLimits& limits = {});

}  // namespace hyct
