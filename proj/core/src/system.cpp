#include "hyct/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyct {

bool CouplingField::is_zero() const {
  auto all_zero = [](const std::vector<SampledFn>& fns) {
    return std::all_of(fns.begin(), fns.end(), [](const SampledFn& f) { return f.is_zero(); });
  };
  if (form == CouplingForm::WForm) return all_zero(c);
  return all_zero(s_mp) && all_zero(s_pp);
}

CouplingField CouplingField::zero_w(int n, int k) {
  CouplingField f;
  f.form = CouplingForm::WForm;
  f.n = n;
  f.k = k;
  f.c.assign(n * n, SampledFn::zero());
  return f;
}

CouplingField CouplingField::zero_u(int n, int k) {
  CouplingField f;
  f.form = CouplingForm::UForm;
  f.n = n;
  f.k = k;
  const int m = n - k;
  f.s_mp.assign(k * m, SampledFn::zero());
  f.s_pp.assign(m * m, SampledFn::zero());
  return f;
}

CouplingField CouplingField::w_constant(int n, int k, const std::vector<double>& c_row_major) {
  if (static_cast<int>(c_row_major.size()) != n * n)
    throw std::invalid_argument("CouplingField::w_constant: need n*n entries");
  CouplingField f = zero_w(n, k);
  for (int i = 0; i < n * n; ++i) f.c[i] = SampledFn(c_row_major[i]);
  return f;
}

CouplingField CouplingField::u_constant(int n, int k, const std::vector<double>& s_mp_row_major,
                                        const std::vector<double>& s_pp_row_major) {
  const int m = n - k;
  if (static_cast<int>(s_mp_row_major.size()) != k * m)
    throw std::invalid_argument("CouplingField::u_constant: S_-+ needs k*m entries");
  if (static_cast<int>(s_pp_row_major.size()) != m * m)
    throw std::invalid_argument("CouplingField::u_constant: S_++ needs m*m entries");
  CouplingField f = zero_u(n, k);
  for (int i = 0; i < k * m; ++i) f.s_mp[i] = SampledFn(s_mp_row_major[i]);
  for (int i = 0; i < m * m; ++i) f.s_pp[i] = SampledFn(s_pp_row_major[i]);
  return f;
}

namespace {

void check_speed_profile(const SpeedProfile& s, const ValidationLimits& lim,
                         std::vector<Diagnostic>& out) {
  if (s.k < 1 || s.m() < 1) {
    out.push_back({"family-count", "need k >= 1 and m >= 1 (got k=" + std::to_string(s.k) +
                                       ", m=" + std::to_string(s.m()) + ")"});
    return;
  }
  if (static_cast<int>(s.lambda.size()) != s.n) {
    out.push_back({"speed-count", "expected " + std::to_string(s.n) + " speed functions, got " +
                                      std::to_string(s.lambda.size())});
    return;
  }

  // Ordering and positivity are checked at the union of all sample grids;
  // between nodes the interpolants are linear so node checks suffice.
  int nq = 1;
  for (const auto& fn : s.lambda) nq = std::max(nq, fn.intervals());
  bool ordering_ok = true, positive_ok = true;
  for (int j = 0; j <= nq && (ordering_ok || positive_ok); ++j) {
    const double x = static_cast<double>(j) / nq;
    for (int i = 0; i < s.n; ++i) {
      const double v = s.value(i, x);
      if (!(v >= lim.ordering_gap)) positive_ok = false;
      if (i + 1 < s.k && !(s.value(i, x) - s.value(i + 1, x) >= lim.ordering_gap))
        ordering_ok = false;
      if (i >= s.k && i + 1 < s.n &&
          !(s.value(i + 1, x) - s.value(i, x) >= lim.ordering_gap))
        ordering_ok = false;
    }
  }
  if (!positive_ok)
    out.push_back({"speed-positivity", "speed magnitude below the positivity margin"});
  if (!ordering_ok)
    out.push_back({"speed-ordering", "strict ordering violated within a speed family"});

  for (int i = 0; i < s.n; ++i)
    if (s.lambda[i].max_difference_quotient() > lim.lipschitz_max) {
      out.push_back({"speed-lipschitz",
                     "difference quotient of speed " + std::to_string(i + 1) +
                         " exceeds the Lipschitz bound"});
      break;
    }
}

void check_coupling(const CouplingField& f, int n, int k, const ValidationLimits& lim,
                    std::vector<Diagnostic>& out) {
  const int m = n - k;
  if (f.n != n || f.k != k) {
    out.push_back({"coupling-dims", "coupling field dimensions disagree with the speed profile"});
    return;
  }
  auto bound_ok = [&](const std::vector<SampledFn>& fns) {
    for (const auto& fn : fns)
      if (std::max(std::fabs(fn.min_value()), std::fabs(fn.max_value())) > lim.coupling_max)
        return false;
    return true;
  };
  if (f.form == CouplingForm::WForm) {
    if (static_cast<int>(f.c.size()) != n * n) {
      out.push_back({"coupling-dims", "w-form coupling needs n*n entries"});
      return;
    }
    if (!bound_ok(f.c)) out.push_back({"coupling-bound", "coupling entry exceeds the L-infinity bound"});
  } else {
    if (static_cast<int>(f.s_mp.size()) != k * m ||
        static_cast<int>(f.s_pp.size()) != m * m) {
      out.push_back({"coupling-dims", "u-form coupling blocks have wrong sizes"});
      return;
    }
    if (!bound_ok(f.s_mp) || !bound_ok(f.s_pp))
      out.push_back({"coupling-bound", "coupling entry exceeds the L-infinity bound"});
    // (S_++)_{pq} = 0 for q <= p, checked exactly.
    for (int p = 0; p < m; ++p)
      for (int q = 0; q <= p; ++q)
        if (!f.s_pp_at(p, q).is_zero()) {
          out.push_back({"structural-zero",
                         "structural zero violated: (S_++)_{" + std::to_string(p + 1) + "," +
                             std::to_string(q + 1) + "} must vanish"});
          return;
        }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const HyperbolicSystem& system, const ValidationLimits& limits) {
  std::vector<Diagnostic> out;
  const int n = system.speeds.n;
  const int k = system.speeds.k;
  if (n != k + system.speeds.m() || n < 2) {
    out.push_back({"dimension", "need n = k + m with n >= 2"});
    return out;
  }
  check_speed_profile(system.speeds, limits, out);
  check_coupling(system.coupling, n, k, limits, out);
  if (system.boundary.rows() != k || system.boundary.cols() != n - k)
    out.push_back({"boundary-dims",
                   "boundary matrix must be k x m = " + std::to_string(k) + " x " +
                       std::to_string(n - k)});
  return out;
}

void require_valid(const HyperbolicSystem& system, const ValidationLimits& limits) {
  const auto diags = validate(system, limits);
  if (diags.empty()) return;
  std::ostringstream os;
  os << "invalid system:";
  for (const auto& d : diags) os << " [" << d.code << "] " << d.message << ";";
  throw std::invalid_argument(os.str());
}

}  // namespace hyct
