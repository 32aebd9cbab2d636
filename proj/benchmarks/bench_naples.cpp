#include <benchmark/benchmark.h>

#include <random>

#include "naples/naples.hpp"

namespace {

std::vector<int> random_preference(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(1, n);
  std::vector<int> v(n);
  for (int& x : v) x = dist(rng);
  return v;
}

void BM_ParkUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const naples::ParkingPreference alpha(random_preference(n, 42));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::park_uniform(alpha, 2));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ParkUniform)->RangeMultiplier(4)->Range(8, 4096);

void BM_ParkTraced(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const naples::ParkingPreference alpha(random_preference(n, 42));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::park_uniform(alpha, 2, naples::TraceMode::On));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ParkTraced)->RangeMultiplier(4)->Range(8, 512);

// The sweep inner loop.
void BM_AllParkKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto prefs = random_preference(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::kernel::all_park(prefs, 1));
  }
}
BENCHMARK(BM_AllParkKernel)->DenseRange(4, 9);

void BM_Excess(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const naples::ParkingPreference alpha(random_preference(n, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::excess(alpha));
  }
}
BENCHMARK(BM_Excess)->RangeMultiplier(8)->Range(8, 4096);

void BM_Witness(benchmark::State& state) {
  const naples::ParkingPreference alpha({8, 4, 7, 1, 6, 8, 7, 5, 10, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::construct_witness(alpha, 2, {4, 7}));
  }
}
BENCHMARK(BM_Witness);

// Sweeps run on worker threads; wall time is the honest measure.
void BM_SweepCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::sweep(n, 2));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(naples::preference_count(n)));
}
BENCHMARK(BM_SweepCounts)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepVerify(benchmark::State& state) {
  naples::SweepOptions opts;
  opts.verify = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::sweep(5, 2, opts));
  }
}
BENCHMARK(BM_SweepVerify)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_PermInvariantFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(naples::count_perm_invariant_fast(n, 2));
  }
}
BENCHMARK(BM_PermInvariantFast)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
