#include <benchmark/benchmark.h>

#include "fixglue/permgroup.hpp"

using namespace fixglue;

namespace {

void BM_chain_s8(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = PermGroup::generated(8, {Perm::from_cycles(8, "(1,2)"), Perm::from_cycles(8, "(1,2,3,4,5,6,7,8)")});
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_chain_s8);

void BM_klein_centralizer_deg36(benchmark::State& state) {
  std::string chi_s, mu_s;
  for (int b = 0; b < 18; ++b) chi_s += "(" + std::to_string(2 * b + 1) + "," + std::to_string(2 * b + 2) + ")";
  for (int b = 0; b < 9; ++b) {
    int x = 4 * b;
    mu_s += "(" + std::to_string(x + 1) + "," + std::to_string(x + 3) + ")(" + std::to_string(x + 2) + "," +
            std::to_string(x + 4) + ")";
  }
  Perm chi = Perm::from_cycles(36, chi_s), mu = Perm::from_cycles(36, mu_s);
  for (auto _ : state) {
    PermGroup c = PermGroup::centralizer(PermGroup::symmetric(36), PermGroup::generated(36, {chi, mu}));
    benchmark::DoNotOptimize(c.order());
  }
}
BENCHMARK(BM_klein_centralizer_deg36);

}  // namespace
