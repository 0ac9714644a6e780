#include <benchmark/benchmark.h>

#include <cmath>

#include "semipart/phi.hpp"
#include "semipart/saddle.hpp"

static void BM_PhiOnAxis(benchmark::State& state) {
  const double X = static_cast<double>(state.range(0));
  const double rho = std::exp(-1.0 / X);
  for (auto _ : state)
    benchmark::DoNotOptimize(semipart::phi_p2(rho, 0.0, 1e-9).value);
}
BENCHMARK(BM_PhiOnAxis)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_PhiOffAxis(benchmark::State& state) {
  const double X = static_cast<double>(state.range(0));
  const double rho = std::exp(-1.0 / X);
  for (auto _ : state)
    benchmark::DoNotOptimize(semipart::phi_p2(rho, 0.37, 1e-9).value);
}
BENCHMARK(BM_PhiOffAxis)->Arg(100)->Arg(1000);

static void BM_SolveSaddle(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(semipart::solve_saddle(n, semipart::WeightConfig::p2()).X);
}
BENCHMARK(BM_SolveSaddle)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
