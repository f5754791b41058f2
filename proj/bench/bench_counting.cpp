// Serial reference vs OpenMP kernels vs the regrouped k' sum.
//
//   ./build/bench/zm_bench --benchmark_filter=KPrime
//   OMP_NUM_THREADS=8 ./build/bench/zm_bench

#include <benchmark/benchmark.h>

#include "zm/counting.hpp"

namespace {

// (m, n, r) with |Aut| spanning a few orders of magnitude
const zm::ZmParams& group(int which) {
  static const zm::ZmParams groups[] = {
      zm::validate(31, 30, 3),    // d = 30
      zm::validate(341, 30, 2),   // d = 10
      zm::validate(1111, 10, 1110), // d = 2
  };
  return groups[which];
}

void BM_KPrimeSerial(benchmark::State& state) {
  const auto& p = group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zm::serial::k_prime(p));
}

void BM_KPrimeParallel(benchmark::State& state) {
  const auto& p = group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zm::k_prime(p));
}

void BM_KPrimeFast(benchmark::State& state) {
  const auto& p = group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zm::k_prime_fast(p));
}

void BM_KConjSerial(benchmark::State& state) {
  const auto& p = group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zm::serial::k_conj(p));
}

void BM_KConjParallel(benchmark::State& state) {
  const auto& p = group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zm::k_conj(p));
}

}  // namespace

BENCHMARK(BM_KPrimeSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KPrimeParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KPrimeFast)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KConjSerial)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KConjParallel)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
