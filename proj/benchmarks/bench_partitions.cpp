#include <benchmark/benchmark.h>

#include "semipart/partitions.hpp"

static void BM_PartitionSeries(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto series = semipart::partition_series(semipart::WeightConfig::p2(), n_max);
    benchmark::DoNotOptimize(series.counts.data());
  }
}
BENCHMARK(BM_PartitionSeries)->Arg(1000)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_BruteForceCount(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(semipart::brute_force_count(semipart::WeightConfig::p2(), n));
}
BENCHMARK(BM_BruteForceCount)->Arg(60)->Arg(100)->Arg(140)->Unit(benchmark::kMillisecond);

static void BM_ConvolutionCheck(benchmark::State& state) {
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(semipart::convolution_check(n_max));
}
BENCHMARK(BM_ConvolutionCheck)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
