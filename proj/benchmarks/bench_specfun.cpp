#include <benchmark/benchmark.h>

#include "umbral/specfun.hpp"

using namespace umbral;

static void BM_Gamma(benchmark::State& state) {
  const cplx z(3.7, 12.5);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(z));
}
BENCHMARK(BM_Gamma);

static void BM_RiemannZeta(benchmark::State& state) {
  const cplx s(0.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(s));
}
BENCHMARK(BM_RiemannZeta)->Arg(1)->Arg(14)->Arg(50);

static void BM_HurwitzZeta(benchmark::State& state) {
  const cplx s(-2.5, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(s, 0.3));
}
BENCHMARK(BM_HurwitzZeta);

static void BM_PolylogDirect(benchmark::State& state) {
  const cplx s(2.5, 1.0);
  const CirclePoint x(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(polylog_circle_direct(s, x));
}
BENCHMARK(BM_PolylogDirect);

static void BM_PolylogHurwitz(benchmark::State& state) {
  const cplx s(0.5, 1.0);
  const CirclePoint x(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(polylog_circle_hurwitz(s, x));
}
BENCHMARK(BM_PolylogHurwitz);
