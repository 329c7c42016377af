#include <benchmark/benchmark.h>

#include "invtensor/kernels.hpp"
#include "invtensor/random.hpp"

using namespace invtensor;

namespace {

// Circle on k vertices with the rotation action, r = 2, local dimension 2.
Decomposition circle_case(int k, int r) {
  Rng rng = make_rng(1, static_cast<std::uint64_t>(k));
  const WscAction a = rotation_circle_action(k);
  return random_decomposition(a, r, std::vector<int>(k, 2), rng);
}

void BM_serial(benchmark::State& state) {
  const Decomposition d = circle_case(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(contract_serial(d, UINT64_MAX));
  state.counters["naive_cost"] = static_cast<double>(naive_cost(d));
}

void BM_parallel(benchmark::State& state) {
  const Decomposition d = circle_case(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(contract_parallel(d, UINT64_MAX));
  state.counters["naive_cost"] = static_cast<double>(naive_cost(d));
}

}  // namespace

BENCHMARK(BM_serial)->Args({4, 2})->Args({6, 2})->Args({8, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->Args({4, 2})->Args({6, 2})->Args({8, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
