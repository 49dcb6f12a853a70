#include <stdexcept>
#include "doctest.h"
#include "fixtures.hpp"
#include "hyct/system.hpp"

using namespace hyct;

namespace {

bool has_code(const std::vector<Diagnostic>& diags, const std::string& code) {
  for (const auto& d : diags)
    if (d.code == code) return true;
  return false;
}

}  // namespace

TEST_CASE("valid calibration system produces no diagnostics") {
  CHECK(validate(fixtures::calibration()).empty());
  CHECK(validate(fixtures::wide_fixture()).empty());
}

TEST_CASE("equal speeds within a family violate the strict ordering") {
  HyperbolicSystem sys;
  sys.speeds = SpeedProfile::constant(2, 1, {1.0, 1.0, 1.0});
  sys.coupling = CouplingField::zero_w(3, 2);
  sys.boundary = Mat(2, 1, {1.0, 1.0});
  const auto diags = validate(sys);
  CHECK(has_code(diags, "speed-ordering"));
  for (const auto& d : diags)
    if (d.code == "speed-ordering") CHECK(d.message.find("strict ordering violated") == 0);
}

TEST_CASE("u-form structural zeros are enforced exactly") {
  HyperbolicSystem sys = fixtures::calibration();
  sys.coupling = CouplingField::u_constant(2, 1, {0.0}, {1e-300});
  CHECK(has_code(validate(sys), "structural-zero"));

  HyperbolicSystem wide = fixtures::wide_fixture();
  // (S_++)_{21} sits strictly below the diagonal and must vanish.
  wide.coupling = CouplingField::u_constant(3, 1, {0.0, 0.0}, {0.0, 0.5, 0.3, 0.0});
  CHECK(has_code(validate(wide), "structural-zero"));
  // The strictly upper entry is allowed.
  wide.coupling = CouplingField::u_constant(3, 1, {0.0, 0.0}, {0.0, 0.5, 0.0, 0.0});
  CHECK(validate(wide).empty());
}

TEST_CASE("remaining invariants are reported, never thrown") {
  SUBCASE("nonpositive speed") {
    HyperbolicSystem sys = fixtures::calibration();
    sys.speeds.lambda[0] = SampledFn(-1.0);
    CHECK(has_code(validate(sys), "speed-positivity"));
  }
  SUBCASE("Lipschitz bound") {
    HyperbolicSystem sys = fixtures::calibration();
    std::vector<double> jumpy(11, 1.0);
    jumpy[5] = 2.0;  // difference quotient 10 with the tight limit below
    sys.speeds.lambda[1] = SampledFn(jumpy);
    ValidationLimits lim;
    lim.lipschitz_max = 5.0;
    CHECK(has_code(validate(sys, lim), "speed-lipschitz"));
    CHECK_FALSE(has_code(validate(sys), "speed-lipschitz"));  // default limit admits it
  }
  SUBCASE("coupling bound") {
    HyperbolicSystem sys = fixtures::calibration();
    sys.coupling = CouplingField::u_constant(2, 1, {2.0}, {0.0});
    ValidationLimits lim;
    lim.coupling_max = 1.0;
    CHECK(has_code(validate(sys, lim), "coupling-bound"));
  }
  SUBCASE("boundary dimensions") {
    HyperbolicSystem sys = fixtures::calibration();
    sys.boundary = Mat(2, 2);
    CHECK(has_code(validate(sys), "boundary-dims"));
  }
  SUBCASE("family counts") {
    HyperbolicSystem sys;
    sys.speeds = SpeedProfile::constant(1, 1, {1.0, 1.0});
    sys.speeds.k = 0;
    sys.coupling = CouplingField::zero_w(2, 0);
    sys.boundary = Mat(0, 2);
    CHECK_FALSE(validate(sys).empty());
  }
}

TEST_CASE("require_valid throws with the diagnostic list") {
  HyperbolicSystem sys = fixtures::calibration();
  sys.speeds = SpeedProfile::constant(1, 1, {1.0, 1.0});
  sys.speeds.lambda[0] = SampledFn(-2.0);
  CHECK_THROWS_WITH_AS(require_valid(sys),
                       doctest::Contains("speed-positivity"), std::invalid_argument);
}
