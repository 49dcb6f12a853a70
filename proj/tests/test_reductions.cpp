#include <stdexcept>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hyct/matrix_class.hpp"
#include "hyct/reductions.hpp"
#include "hyct/times.hpp"
#include "oracles.hpp"

using namespace hyct;

namespace {

HyperbolicSystem square_system(const Mat& b) {
  const int k = b.rows();
  HyperbolicSystem sys;
  std::vector<double> speeds;
  for (int i = 0; i < k; ++i) speeds.push_back(2.0 - i * 0.5 / k);
  for (int i = 0; i < k; ++i) speeds.push_back(1.0 + i * 0.5 / k);
  sys.speeds = SpeedProfile::constant(k, k, speeds);
  sys.coupling = CouplingField::zero_w(2 * k, k);
  sys.boundary = b;
  return sys;
}

Mat random_exact_class_matrix(int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (;;) {
    Mat b(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) b.at(i, j) = uni(rng);
    bool healthy = true;
    for (int i = 1; i <= k && healthy; ++i)
      healthy = std::fabs(b.trailing(i).det()) >= 0.1;
    if (healthy) return b;
  }
}

}  // namespace

TEST_CASE("scalar reversal inverts the reflection coefficient") {
  const TimeReversal red = time_reverse_reduction(square_system(Mat(1, 1, {4.0})));
  CHECK(red.b_tilde_inverse.at(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(red.system.boundary.at(0, 0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("2x2 reversal produces the inverse of the doubly reversed matrix") {
  const Mat b(2, 2, {1.0, 2.0, 0.0, 1.0});
  const TimeReversal red = time_reverse_reduction(square_system(b));
  // Reversing both index orders of B.
  const Mat expected_tilde(2, 2, {1.0, 0.0, 2.0, 1.0});
  CHECK((red.b_tilde - expected_tilde).max_abs() == 0.0);
  const Mat prod = red.b_tilde * red.b_tilde_inverse;
  CHECK((prod - Mat::identity(2)).max_abs() < 1e-12);
}

TEST_CASE("reversed system swaps families and reverses the in-family order") {
  const HyperbolicSystem sys = square_system(Mat(2, 2, {1.0, 0.3, 0.2, 1.0}));
  const TimeReversal red = time_reverse_reduction(sys);
  REQUIRE(red.system.n() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(red.system.speeds.value(i, 0.3) == sys.speeds.value(3 - i, 0.3));
  CHECK(validate(red.system).empty());
}

TEST_CASE("w-form coupling reverses indices and flips sign") {
  HyperbolicSystem sys = square_system(Mat(1, 1, {1.0}));
  std::vector<double> c = {0.1, 0.2, 0.3, 0.4};
  sys.coupling = CouplingField::w_constant(2, 1, c);
  const TimeReversal red = time_reverse_reduction(sys);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(red.system.coupling.c_at(a, b)(0.5) == -c[(1 - a) * 2 + (1 - b)]);
}

TEST_CASE("elimination factors reproduce the inverse and certify the class") {
  std::mt19937_64 rng(2025);
  for (int rep = 0; rep < 100; ++rep) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const Mat b = random_exact_class_matrix(k, rng);
    REQUIRE(in_class_be(b, k, k));
    const TimeReversal red = time_reverse_reduction(square_system(b));
    REQUIRE(red.factors.has_value());
    // Upper factor really is upper triangular.
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j) CHECK(red.factors->upper.at(i, j) == 0.0);
    // T_N ... T_1 B~ = U holds.
    Mat acc = red.b_tilde;
    for (const Mat& t : red.factors->row_ops) acc = t * acc;
    CHECK((acc - red.factors->upper).max_abs() < 1e-10);
    // The reduction is sound: the inverse lands in the null class.
    CHECK(red.inverse_in_class_b);
    CHECK(in_class_b(red.b_tilde_inverse, k, k));
    CHECK((red.b_tilde * red.b_tilde_inverse - Mat::identity(k)).max_abs() < 1e-10);
  }
}

TEST_CASE("reversal rejects bad inputs") {
  CHECK_THROWS_AS(time_reverse_reduction(fixtures::wide_fixture()), std::invalid_argument);
  CHECK_THROWS_AS(time_reverse_reduction(square_system(Mat(2, 2, {1.0, 1.0, 1.0, 1.0}))),
                  std::invalid_argument);  // singular after reversal
  HyperbolicSystem coupled = square_system(Mat(1, 1, {1.0}));
  coupled.coupling = CouplingField::u_constant(2, 1, {0.5}, {0.0});
  CHECK_THROWS_AS(time_reverse_reduction(coupled), std::invalid_argument);
}

TEST_CASE("augmentation adds fast components with the block boundary matrix") {
  const HyperbolicSystem wide = fixtures::wide_fixture();
  const HyperbolicSystem hat = augment_system(wide, 0.01);
  CHECK(hat.n() == 4);
  CHECK(hat.k() == 2);
  CHECK(hat.m() == 2);
  CHECK(hat.speeds.value(0, 0.5) == 100.0);  // magnitude (1+m-k-1)/eps
  CHECK(validate(hat).empty());
  // B^ = [[1, 0], [0.5, 1]]: identity block on top, B across the bottom.
  CHECK(hat.boundary.at(0, 0) == 1.0);
  CHECK(hat.boundary.at(0, 1) == 0.0);
  CHECK(hat.boundary.at(1, 0) == 0.5);
  CHECK(hat.boundary.at(1, 1) == 1.0);
  CHECK(in_class_be(hat.boundary, 2, 2));
}

TEST_CASE("augmented optimal time converges to the original") {
  const HyperbolicSystem wide = fixtures::wide_fixture();
  const double base = optimal_time(wide.speeds);
  CHECK(base == 1.5);
  for (double eps : {0.1, 0.01, 0.001}) {
    const double top = optimal_time(augment_system(wide, eps).speeds);
    CHECK(std::fabs(top - base) <= 2.0 * eps);
  }
}

TEST_CASE("augmentation keeps the u-form structure") {
  HyperbolicSystem wide = fixtures::wide_fixture();
  wide.coupling = CouplingField::u_constant(3, 1, {0.4, 0.2}, {0.0, 0.7, 0.0, 0.0});
  const HyperbolicSystem hat = augment_system(wide, 0.01);
  CHECK(validate(hat).empty());
  CHECK(hat.coupling.form == CouplingForm::UForm);
  CHECK(hat.coupling.s_mp_at(0, 0).is_zero());   // added component row
  CHECK(hat.coupling.s_mp_at(1, 0)(0.0) == 0.4);  // original row shifted down
  CHECK(hat.coupling.s_pp_at(0, 1)(0.0) == 0.7);
}

TEST_CASE("augmentation rejects m <= k and oversized eps") {
  CHECK_THROWS_AS(augment_system(fixtures::calibration(), 0.01), std::invalid_argument);
  CHECK_THROWS_AS(augment_system(fixtures::wide_fixture(), 1.0), std::invalid_argument);
}
