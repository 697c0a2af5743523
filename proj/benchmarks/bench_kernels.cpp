#include <vector>

#include <benchmark/benchmark.h>

#include "umbral/kernels.hpp"

using namespace umbral;

static void BM_PeriodicBernoulliSeries(benchmark::State& state) {
  const CirclePoint x(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(periodic_bernoulli(3, x, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PeriodicBernoulliSeries)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

static void BM_ClausenDual(benchmark::State& state) {
  const CirclePoint x(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(clausen_dual(2, x, 100000, Normalization::Analytic));
}
BENCHMARK(BM_ClausenDual);

static void BM_MasterF(benchmark::State& state) {
  const MasterFunctionConfig cfg = default_calibration().config;
  const CirclePoint x(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(master_F(2.7, x, cfg));
}
BENCHMARK(BM_MasterF);

static void BM_Calibrate(benchmark::State& state) {
  const std::vector<Anchor> anchors = default_anchors();
  for (auto _ : state) benchmark::DoNotOptimize(calibrate_master(anchors));
}
BENCHMARK(BM_Calibrate)->Unit(benchmark::kMillisecond);

static void BM_HermiteRoots(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hermite_roots(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HermiteRoots)->Arg(5)->Arg(20)->Arg(100);
