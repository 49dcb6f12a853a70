#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hyct/mat.hpp"
#include "hyct/matrix_class.hpp"
#include "oracles.hpp"

using namespace hyct;

namespace {

Mat random_mat(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = uni(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant matches Laplace expansion") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      const Mat a = random_mat(n, n, rng);
      CHECK(a.det() == doctest::Approx(oracles::brute_force_det(a)).epsilon(1e-10));
    }
}

TEST_CASE("inverse multiplies back to identity") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Mat a = random_mat(4, 4, rng);
    for (int i = 0; i < 4; ++i) a.at(i, i) += 3.0;  // keep well conditioned
    const Mat err = a * a.inverse() - Mat::identity(4);
    CHECK(err.max_abs() < 1e-12);
  }
}

TEST_CASE("class membership on the pinned examples") {
  SUBCASE("m = 1 is vacuous") {
    std::mt19937_64 rng(3);
    for (int k = 1; k <= 4; ++k) CHECK(in_class_b(random_mat(k, 1, rng), k, 1));
  }
  SUBCASE("zero trailing entry fails") {
    const Mat b(2, 2, {1.0, 0.0, 0.0, 0.0});
    CHECK_FALSE(in_class_b(b, 2, 2));
  }
  SUBCASE("3x3 with invertible trailing minors passes, cross-checked by brute force") {
    const Mat b(3, 3, {1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0});
    CHECK(in_class_b(b, 3, 3));
    for (int i = 1; i <= 2; ++i)
      CHECK(std::fabs(oracles::brute_force_det(b.trailing(i))) > 1e-12);
  }
  SUBCASE("exact class scalar and wide examples") {
    CHECK(in_class_be(Mat(1, 1, {2.0}), 1, 1));
    CHECK(in_class_be(Mat(1, 2, {0.0, 1.0}), 1, 2));
  }
  SUBCASE("exact class is strictly stronger than invertibility") {
    const Mat b(2, 2, {0.0, 1.0, 1.0, 0.0});
    CHECK(std::fabs(oracles::brute_force_det(b)) > 0.5);  // invertible
    CHECK_FALSE(in_class_be(b, 2, 2));                    // trailing 1x1 vanishes
  }
  SUBCASE("exact class requires m >= k") {
    CHECK_THROWS_AS(in_class_be(Mat(2, 1, {1.0, 1.0}), 2, 1), std::invalid_argument);
  }
}

TEST_CASE("class nesting and planted singular minors over random sweeps") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> kd(1, 4);
  int be_hits = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int k = kd(rng);
    const int m = k + kd(rng) % 3;  // m >= k
    const Mat b = random_mat(k, m, rng);
    if (in_class_be(b, k, m)) {
      ++be_hits;
      CHECK(in_class_b(b, k, m));
    }
  }
  CHECK(be_hits > 100);  // the sweep actually exercised the implication

  for (int rep = 0; rep < 200; ++rep) {
    const int k = 1 + kd(rng) % 3;
    const int m = std::max(2, k);
    Mat b = random_mat(k, m, rng);
    const int imax = std::min(k, m - 1);
    std::uniform_int_distribution<int> id(1, imax);
    const int i = id(rng);
    if (i == 1) {
      b.at(k - 1, m - 1) = 0.0;
    } else {
      // Duplicate the trailing segment of the last row into the row above:
      // the trailing i x i minor becomes exactly singular.
      for (int j = m - i; j < m; ++j) b.at(k - 2, j) = b.at(k - 1, j);
    }
    CHECK_FALSE(in_class_b(b, k, m));
  }
}
