#include <benchmark/benchmark.h>

#include "semipart/sieve.hpp"

static void BM_SievePrimes(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto table = semipart::sieve_primes(limit);
    benchmark::DoNotOptimize(table.primes.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SievePrimes)->Arg(1 << 16)->Arg(1 << 20)->Arg(10000000);

static void BM_SemiprimeParts(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto parts = semipart::semiprime_parts(limit);
    benchmark::DoNotOptimize(parts.data());
  }
}
BENCHMARK(BM_SemiprimeParts)->Arg(10000)->Arg(100000)->Arg(1000000);

static void BM_Pi2Star(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semipart::pi2_star(x));
}
BENCHMARK(BM_Pi2Star)->Arg(100000)->Arg(1000000)->Arg(10000000);

static void BM_SemiprimeCountMod(benchmark::State& state) {
  const auto t = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(semipart::semiprime_count_mod(t, 12, 7).count);
}
BENCHMARK(BM_SemiprimeCountMod)->Arg(100000)->Arg(1000000);

BENCHMARK_MAIN();
