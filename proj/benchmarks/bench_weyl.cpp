#include <benchmark/benchmark.h>

#include "semipart/sieve.hpp"
#include "semipart/weyl.hpp"

static void BM_S2(benchmark::State& state) {
  const auto X = static_cast<std::uint64_t>(state.range(0));
  semipart::semiprime_cache(X);  // exclude table construction
  for (auto _ : state) benchmark::DoNotOptimize(semipart::s2(0.6180339887, X));
}
BENCHMARK(BM_S2)->Arg(10000)->Arg(100000)->Arg(1000000);

static void BM_DirichletApprox(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(semipart::dirichlet_approx(0.73904612, 1000000));
}
BENCHMARK(BM_DirichletApprox);

static void BM_MinimaxCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(semipart::minimax_check(1e6, 100.0).grid_min);
}
BENCHMARK(BM_MinimaxCheck);

BENCHMARK_MAIN();
