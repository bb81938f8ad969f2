// Serial reference kernels against the OpenMP ones.

#include <benchmark/benchmark.h>

#include "cliffalg/clifford/multiplication.hpp"
#include "cliffalg/exactla/elimination.hpp"

using namespace cliffalg;

namespace {

void BM_MultiplicationMatrix(benchmark::State& state) {
  const auto family = clifford::universal_family(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(clifford::multiplication_matrix(family, d));
}

void BM_MultiplicationMatrixSerial(benchmark::State& state) {
  const auto family = clifford::universal_family(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(clifford::serial::multiplication_matrix(family, d));
}

void BM_Rank(benchmark::State& state) {
  const auto m = clifford::multiplication_matrix(clifford::universal_family(static_cast<int>(state.range(0))),
                                                 static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exactla::rank(m));
}

void BM_RankSerial(benchmark::State& state) {
  const auto m = clifford::multiplication_matrix(clifford::universal_family(static_cast<int>(state.range(0))),
                                                 static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(exactla::serial::rank(m));
}

}  // namespace

BENCHMARK(BM_MultiplicationMatrix)->Args({2, 8})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicationMatrixSerial)->Args({2, 8})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank)->Args({2, 8})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Args({2, 8})->Args({3, 5})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
