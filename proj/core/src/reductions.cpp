#include "hyct/reductions.hpp"

#include <cmath>
#include <stdexcept>

namespace hyct {

namespace {

Mat inverse_from_factors(const GaussianFactors& f) {
  const int n = f.upper.rows();
  Mat lower = Mat::identity(n);
  for (const auto& t : f.row_ops) lower = t * lower;
  return f.upper.inverse() * lower;
}

}  // namespace

TimeReversal time_reverse_reduction(const HyperbolicSystem& system, double det_tol) {
  const int k = system.k();
  const int m = system.m();
  const int n = system.n();
  if (m != k)
    throw std::invalid_argument("time_reverse_reduction: requires m = k");
  if (system.coupling.form == CouplingForm::UForm && !system.coupling.is_zero())
    throw std::invalid_argument(
        "time_reverse_reduction: u-form coupling does not survive time reversal; "
        "only S = 0 is accepted");

  TimeReversal out;
  out.b_tilde = system.boundary.reversed();
  {
    const double scale = out.b_tilde.max_abs();
    if (scale == 0.0 || std::fabs(out.b_tilde.det()) <= det_tol * std::pow(scale, k))
      throw std::invalid_argument("time_reverse_reduction: reversed boundary matrix is singular");
  }

  if (in_class_be(system.boundary, k, m, det_tol)) {
    // Leading minors of B~ equal the trailing minors of B, so elimination
    // needs no pivoting; record the row operations and the triangular factor.
    GaussianFactors f;
    Mat work = out.b_tilde;
    for (int c = 0; c < k; ++c) {
      for (int r = c + 1; r < k; ++r) {
        const double factor = -work.at(r, c) / work.at(c, c);
        if (factor == 0.0) continue;
        Mat t = Mat::identity(k);
        t.at(r, c) = factor;
        for (int j = 0; j < k; ++j) work.at(r, j) += factor * work.at(c, j);
        work.at(r, c) = 0.0;
        f.row_ops.push_back(std::move(t));
      }
    }
    f.upper = work;
    out.b_tilde_inverse = inverse_from_factors(f);
    out.factors = std::move(f);
  } else {
    out.b_tilde_inverse = out.b_tilde.inverse();
  }
  out.inverse_in_class_b = in_class_b(out.b_tilde_inverse, k, k, det_tol);

  // Reversed system: with m = k the family swap plus the in-family reversal
  // amount to reversing the full component order.
  SpeedProfile rs;
  rs.n = n;
  rs.k = k;
  rs.lambda.reserve(n);
  for (int i = 0; i < n; ++i) rs.lambda.push_back(system.speeds.lambda[n - 1 - i]);

  CouplingField rc = CouplingField::zero_w(n, k);
  if (system.coupling.form == CouplingForm::WForm) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const SampledFn& src = system.coupling.c_at(n - 1 - a, n - 1 - b);
        if (src.is_zero()) continue;
        if (src.is_constant()) {
          rc.c[a * n + b] = SampledFn(-src.constant_value());
        } else {
          std::vector<double> neg = src.samples();
          for (double& v : neg) v = -v;
          rc.c[a * n + b] = SampledFn(std::move(neg));
        }
      }
  }

  out.system.speeds = std::move(rs);
  out.system.coupling = std::move(rc);
  out.system.boundary = out.b_tilde_inverse;
  return out;
}

HyperbolicSystem augment_system(const HyperbolicSystem& system, double eps) {
  const int k = system.k();
  const int m = system.m();
  const int n = system.n();
  if (m <= k) throw std::invalid_argument("augment_system: requires m > k");
  if (!(eps > 0.0)) throw std::invalid_argument("augment_system: eps must be positive");

  const int extra = m - k;
  // Added speeds (1+m-k-j)/eps, j = 1..m-k, decrease down to 1/eps; the
  // slowest added one must still dominate every existing speed.
  const double slowest_added = 1.0 / eps;
  if (slowest_added <= system.speeds.max_speed())
    throw std::invalid_argument(
        "augment_system: eps too large, added speeds do not dominate the existing ones");

  HyperbolicSystem out;
  out.speeds.n = 2 * m;
  out.speeds.k = m;
  out.speeds.lambda.reserve(2 * m);
  for (int j = 1; j <= extra; ++j)
    out.speeds.lambda.emplace_back(static_cast<double>(1 + extra - j) / eps);
  for (int i = 0; i < n; ++i) out.speeds.lambda.push_back(system.speeds.lambda[i]);

  if (system.coupling.form == CouplingForm::WForm) {
    out.coupling = CouplingField::zero_w(2 * m, m);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        out.coupling.c[(a + extra) * (2 * m) + (b + extra)] = system.coupling.c_at(a, b);
  } else {
    out.coupling = CouplingField::zero_u(2 * m, m);
    // New minus components are pure transport: only the original k rows of
    // S_-+ are populated; S_++ is unchanged.
    for (int i = 0; i < k; ++i)
      for (int q = 0; q < m; ++q)
        out.coupling.s_mp[(i + extra) * m + q] = system.coupling.s_mp_at(i, q);
    out.coupling.s_pp = system.coupling.s_pp;
  }

  // Boundary matrix (m x m): identity block feeding the added components
  // from the first m-k plus components, original B below.
  Mat bb(m, m);
  for (int j = 0; j < extra; ++j) bb.at(j, j) = 1.0;
  for (int i = 0; i < k; ++i)
    for (int q = 0; q < m; ++q) bb.at(extra + i, q) = system.boundary.at(i, q);
  out.boundary = std::move(bb);
  return out;
}

}  // namespace hyct
