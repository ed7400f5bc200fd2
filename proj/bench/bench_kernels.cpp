// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "betaexp/stats_kernels.hpp"

namespace k = betaexp::kernels;

namespace {

constexpr std::size_t kMaxInput = std::size_t{1} << 24;

// Shared input; every benchmark reads a prefix of at most kMaxInput digits.
const std::vector<std::uint8_t>& input() {
  static const std::vector<std::uint8_t> d = k::serial::fair_coin_digits(17, kMaxInput);
  return d;
}

template <auto Fn>
void block_counts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto len = static_cast<unsigned>(state.range(1));
  const auto& d = input();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(d.data(), n, len));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Fn>
void distinct_factors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto len = static_cast<unsigned>(state.range(1));
  const auto& d = input();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(d.data(), n, len));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Fn>
void fair_coin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(42, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (std::int64_t n : {1 << 16, 1 << 20, 1 << 24}) {
    for (std::int64_t len : {4, 12, 20}) b->Args({n, len});
  }
}

void factor_sizes(benchmark::internal::Benchmark* b) {
  for (std::int64_t n : {1 << 16, 1 << 20, 1 << 24}) {
    for (std::int64_t len : {8, 24, 48}) b->Args({n, len});
  }
}

}  // namespace

BENCHMARK(block_counts<k::serial::block_counts>)->Name("block_counts/serial")->Apply(sizes)->UseRealTime();
BENCHMARK(block_counts<k::parallel::block_counts>)->Name("block_counts/parallel")->Apply(sizes)->UseRealTime();
BENCHMARK(distinct_factors<k::serial::distinct_factors>)
    ->Name("distinct_factors/serial")
    ->Apply(factor_sizes)
    ->UseRealTime();
BENCHMARK(distinct_factors<k::parallel::distinct_factors>)
    ->Name("distinct_factors/parallel")
    ->Apply(factor_sizes)
    ->UseRealTime();
BENCHMARK(fair_coin<k::serial::fair_coin_digits>)->Name("fair_coin/serial")->Arg(1 << 20)->Arg(1 << 24)->UseRealTime();
BENCHMARK(fair_coin<k::parallel::fair_coin_digits>)
    ->Name("fair_coin/parallel")
    ->Arg(1 << 20)
    ->Arg(1 << 24)
    ->UseRealTime();

BENCHMARK_MAIN();
