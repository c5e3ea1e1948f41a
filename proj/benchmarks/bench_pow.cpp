#include <benchmark/benchmark.h>

#include "coquat/coquat.hpp"

namespace {

using namespace coquat;

const SplitQuaternion kQ = normalize(SplitQuaternion(0.9, 0.3, 0.5, -0.2));

void BM_Mul(benchmark::State& state) {
  SplitQuaternion p(0.9, 0.3, 0.5, -0.2), q(1.1, -0.4, 0.2, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p);
    benchmark::DoNotOptimize(mul(p, q));
  }
}
BENCHMARK(BM_Mul);

void BM_LeftPowClosed(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(unchecked::left_pow_closed(kQ, n));
}
BENCHMARK(BM_LeftPowClosed)->RangeMultiplier(10)->Range(10, 1000000);

void BM_MatPowNaive(benchmark::State& state) {
  const auto n = state.range(0);
  const Mat4 m = left_matrix(kQ);
  for (auto _ : state) benchmark::DoNotOptimize(unchecked::mat_pow_naive(m, n));
}
BENCHMARK(BM_MatPowNaive)->RangeMultiplier(10)->Range(10, 100000);

void BM_PowClosed(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pow_closed(kQ, n));
}
BENCHMARK(BM_PowClosed)->RangeMultiplier(10)->Range(10, 1000);

void BM_PowBySquaring(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pow_by_squaring(kQ, n));
}
BENCHMARK(BM_PowBySquaring)->RangeMultiplier(10)->Range(10, 1000);

void BM_ExpSeries(benchmark::State& state) {
  const Mat4 m = 0.7 * left_matrix(Vector3M(0.0, 1.0, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(mat_exp_series(m));
}
BENCHMARK(BM_ExpSeries);

void BM_ExpClosed(benchmark::State& state) {
  const Vector3M eps(0.0, 1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(exp_left_closed(eps, 0.7));
}
BENCHMARK(BM_ExpClosed);

}  // namespace

BENCHMARK_MAIN();
