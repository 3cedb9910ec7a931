#include <benchmark/benchmark.h>

#include "fftower/orders.hpp"
#include "fftower/tower.hpp"

using namespace fftower;

namespace {

TowerState& tower_q3(int levels) {
  static TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
  if (ts.top() < levels) ts.extend_to(levels);
  return ts;
}

void bm_mul(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TowerState& ts = tower_q3(n);
  const TowerField& tf = ts.field();
  Element a = ts.x(n);
  Element b = tf.add(a, tf.one());
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf.mul(a, b));
  }
}
BENCHMARK(bm_mul)->DenseRange(1, 8);

void bm_inv(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TowerState& ts = tower_q3(n);
  const TowerField& tf = ts.field();
  Element a = tf.add(ts.x(n), tf.one());
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf.inv(a));
  }
}
BENCHMARK(bm_inv)->DenseRange(1, 8);

void bm_pow_group_order(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  TowerState& ts = tower_q3(n);
  const TowerField& tf = ts.field();
  Element a = ts.x(n);
  Bigint e = tf.group_order(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf.pow(a, e));
  }
}
BENCHMARK(bm_pow_group_order)->DenseRange(1, 6);

void bm_extend(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
    ts.extend_to(n);
    benchmark::DoNotOptimize(ts.top());
  }
}
BENCHMARK(bm_extend)->DenseRange(2, 6);

}  // namespace

BENCHMARK_MAIN();
