#include <benchmark/benchmark.h>

#include "noflip/enumerate.hpp"

using namespace noflip::enumerate;

static void BM_CensusReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::census(n));
  state.SetItemsProcessed(state.iterations() * (1LL << n) * ((1LL << n) - 1));
}
BENCHMARK(BM_CensusReference)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_CensusKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SweepOptions opts{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(census(n, opts));
  state.SetItemsProcessed(state.iterations() * (1LL << n) * ((1LL << n) - 1));
}
BENCHMARK(BM_CensusKernel)
    ->ArgsProduct({{6, 8, 10}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_NoLossKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(no_loss_strings(n));
}
BENCHMARK(BM_NoLossKernel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
