#include <benchmark/benchmark.h>

#include <random>

#include "fixglue/linear_code.hpp"

using namespace fixglue;

namespace {

LinearCode random_code(uint64_t seed, int k, int n) {
  std::mt19937_64 rng(seed);
  while (true) {
    BitMatrix m(k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j)
        if (rng() & 1) m.set(i, j, true);
    LinearCode c = LinearCode::from_rows(m, n);
    if (c.dim() == k) return c;
  }
}

void BM_mindist_exhaustive_24_12(benchmark::State& state) {
  LinearCode c = random_code(21, 12, 24);
  for (auto _ : state) benchmark::DoNotOptimize(c.min_distance(MinDistMode::kExhaustive));
}
BENCHMARK(BM_mindist_exhaustive_24_12);

void BM_mindist_infoset_24_12(benchmark::State& state) {
  LinearCode c = random_code(21, 12, 24);
  for (auto _ : state) benchmark::DoNotOptimize(c.min_distance(MinDistMode::kAuto));
}
BENCHMARK(BM_mindist_infoset_24_12);

void BM_mindist_filter_72_26(benchmark::State& state) {
  LinearCode c = random_code(22, 26, 72);
  for (auto _ : state) benchmark::DoNotOptimize(c.min_distance(MinDistMode::kAuto, 16));
}
BENCHMARK(BM_mindist_filter_72_26);

void BM_weight_enumerator_24_12(benchmark::State& state) {
  LinearCode c = random_code(23, 12, 24);
  for (auto _ : state) benchmark::DoNotOptimize(c.weight_enumerator());
}
BENCHMARK(BM_weight_enumerator_24_12);

}  // namespace
