#include <benchmark/benchmark.h>

#include <random>

#include "hyct/hum.hpp"
#include "hyct/matrix_class.hpp"
#include "hyct/solver.hpp"
#include "hyct/times.hpp"

using namespace hyct;

namespace {

SpeedProfile ramp_profile(int nq) {
  std::vector<double> minus(nq + 1), plus(nq + 1);
  for (int j = 0; j <= nq; ++j) {
    const double x = static_cast<double>(j) / nq;
    minus[j] = 2.0 + 0.5 * x;
    plus[j] = 1.0 + 0.25 * x;
  }
  SpeedProfile p;
  p.n = 2;
  p.k = 1;
  p.lambda.emplace_back(std::move(minus));
  p.lambda.emplace_back(std::move(plus));
  return p;
}

HyperbolicSystem calibration() {
  HyperbolicSystem sys;
  sys.speeds = SpeedProfile::constant(1, 1, {1.0, 1.0});
  sys.coupling = CouplingField::zero_u(2, 1);
  sys.boundary = Mat(1, 1, {1.0});
  return sys;
}

}  // namespace

static void BM_TimeReport(benchmark::State& state) {
  const SpeedProfile p = ramp_profile(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(time_report(p));
}
BENCHMARK(BM_TimeReport)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_ClassCheck(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Mat b(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b.at(i, j) = uni(rng);
  for (auto _ : state) benchmark::DoNotOptimize(in_class_b(b, k, k));
}
BENCHMARK(BM_ClassCheck)->Arg(2)->Arg(4)->Arg(8);

static void BM_PrimalSolve(benchmark::State& state) {
  const int nx = static_cast<int>(state.range(0));
  const HyperbolicSystem sys = calibration();
  const DiscreteSystem ds(sys, Grid{nx, 0.9}, 1.0);
  const StateField w0 = StateField::sample(2, nx, [](int, double x) { return x * (1.0 - x); });
  for (auto _ : state) benchmark::DoNotOptimize(free_evolution(ds, w0));
}
BENCHMARK(BM_PrimalSolve)->Arg(100)->Arg(400)->Arg(1600);

static void BM_GramianApply(benchmark::State& state) {
  const int nx = static_cast<int>(state.range(0));
  const DiscreteSystem ds(calibration(), Grid{nx, 0.9}, 2.0);
  const StateField v = StateField::sample(2, nx, [](int, double x) { return x * (1.0 - x); });
  for (auto _ : state) benchmark::DoNotOptimize(gramian_apply(ds, v, 1e-6));
}
BENCHMARK(BM_GramianApply)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
