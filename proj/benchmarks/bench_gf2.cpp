#include <benchmark/benchmark.h>

#include <random>

#include "fixglue/bitmatrix.hpp"

using namespace fixglue;

namespace {

BitMatrix random_matrix(uint64_t seed, int rows, int cols) {
  std::mt19937_64 rng(seed);
  BitMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng() & 1) m.set(i, j, true);
  return m;
}

void BM_rref_64x64(benchmark::State& state) {
  BitMatrix m = random_matrix(7, 64, 64);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_64x64);

void BM_kernel_36x72(benchmark::State& state) {
  BitMatrix m = random_matrix(8, 36, 72);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel_36x72);

void BM_intersect_18x36(benchmark::State& state) {
  BitMatrix a = random_matrix(9, 18, 36), b = random_matrix(10, 18, 36);
  for (auto _ : state) benchmark::DoNotOptimize(intersect_spaces(a, b));
}
BENCHMARK(BM_intersect_18x36);

}  // namespace
