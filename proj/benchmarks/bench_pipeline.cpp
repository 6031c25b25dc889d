#include <benchmark/benchmark.h>

#include "dbext/extender.hpp"
#include "dbext/graph.hpp"
#include "dbext/matching.hpp"

namespace {

void BM_Matching(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const dbext::Word v = dbext::generate_de_bruijn(k, n);
  const auto cycle = dbext::sequence_to_cycle(v, dbext::GraphParams{k, n - 1});
  const auto sectioning = dbext::sections_of(cycle);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dbext::perfect_matching(sectioning));
  }
}
BENCHMARK(BM_Matching)->Args({2, 3})->Args({2, 6})->Args({2, 10})->Args({3, 6})->Args({4, 6});

void BM_Extend(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const dbext::Word v = dbext::generate_de_bruijn(k, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dbext::extend(v, k, n));
  }
}
BENCHMARK(BM_Extend)->Args({2, 3})->Args({2, 6})->Args({3, 6})->Args({4, 6});

void BM_Generate(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dbext::generate_de_bruijn(k, n));
  }
}
BENCHMARK(BM_Generate)->Args({2, 10})->Args({2, 16})->Args({4, 8});

}  // namespace

BENCHMARK_MAIN();
