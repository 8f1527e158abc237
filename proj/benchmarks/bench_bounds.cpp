#include <benchmark/benchmark.h>

#include "oppbounds/analysis.hpp"
#include "oppbounds/quadrature.hpp"
#include "oppbounds/verify.hpp"

using namespace oppbounds;

static void BM_OppenheimRatio(benchmark::State& state) {
  const PosParam p(0.55);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x >= kHalfPi) x = 1e-6;
    benchmark::DoNotOptimize(oppenheim_ratio(Radians(x), p));
  }
}
BENCHMARK(BM_OppenheimRatio);

static void BM_CriticalParam(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-6;
    if (x >= kHalfPi) x = 1e-6;
    benchmark::DoNotOptimize(critical_param(Radians(x)));
  }
}
BENCHMARK(BM_CriticalParam);

static void BM_CriticalPoint(benchmark::State& state) {
  // sweep p across the interior of the middle regimes
  double p = 0.51;
  for (auto _ : state) {
    p += 1e-4;
    if (p >= 0.63) p = 0.51;
    benchmark::DoNotOptimize(critical_point(PosParam(p)).value());
  }
}
BENCHMARK(BM_CriticalPoint);

static void BM_SiHalfPi(benchmark::State& state) {
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(si_half_pi(tol));
}
BENCHMARK(BM_SiHalfPi)->Arg(6)->Arg(9)->Arg(12);

static void BM_BruteForceConstants(benchmark::State& state) {
  const PosParam p(0.55);
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_constants(p, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BruteForceConstants)->Arg(1000)->Arg(100000)->Arg(1000000);

BENCHMARK_MAIN();
