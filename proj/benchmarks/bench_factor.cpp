#include <benchmark/benchmark.h>

#include "fftower/factor.hpp"
#include "fftower/orders.hpp"

using namespace fftower;

namespace {

void bm_factor_chain_piece(benchmark::State& state) {
  // q^{2^j} + 1 for q = 3: the per-level pieces of the group order chain
  unsigned long j = static_cast<unsigned long>(state.range(0));
  Bigint n = bigint_pow(3, 1ul << j) + 1;
  FactorOptions opts;
  opts.budget_seconds = 30.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_integer(n, nullptr, opts));
  }
}
BENCHMARK(bm_factor_chain_piece)->DenseRange(1, 5);

void bm_group_order_factory(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    orders::GroupOrderFactory factory;
    benchmark::DoNotOptimize(factory.factor_group_order(3, n));
  }
}
BENCHMARK(bm_group_order_factory)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
