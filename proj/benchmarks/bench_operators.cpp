#include <benchmark/benchmark.h>

#include <cmath>

#include "umbral/fock.hpp"
#include "umbral/kernels.hpp"
#include "umbral/operators.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/verify.hpp"

using namespace umbral;

static void BM_Hilbert(benchmark::State& state) {
  const FourierSeries f = periodic_bernoulli_series(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(f));
}
BENCHMARK(BM_Hilbert)->Arg(256)->Arg(100000);

static void BM_Translate(benchmark::State& state) {
  const FourierSeries f = periodic_bernoulli_series(3, 256);
  for (auto _ : state) benchmark::DoNotOptimize(translate(f, 0.3));
}
BENCHMARK(BM_Translate);

static void BM_ConjugationDefect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjugation_defect(0.5, 1, state.range(0)));
}
BENCHMARK(BM_ConjugationDefect)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_WeylDisplacement(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weyl_displacement(0.3, -0.2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WeylDisplacement)->Arg(16)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_TanhSinhLogSingular(benchmark::State& state) {
  const auto f = [](double x) { return std::log(2.0 * std::sin(kPi * x)); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, QuadratureSpec::tanh_sinh()));
}
BENCHMARK(BM_TanhSinhLogSingular);

static void BM_OrthogonalityEntry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_entry(2, 3, PairKind::BA));
}
BENCHMARK(BM_OrthogonalityEntry)->Unit(benchmark::kMillisecond);
