#include <benchmark/benchmark.h>

#include "zeroruns/compositions.hpp"
#include "zeroruns/matrices.hpp"
#include "zeroruns/oracle.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"

namespace {

using namespace zeroruns;

// Full table of length n from a cold memo.
void BM_FTableCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    runcount_cache::clear();
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) benchmark::DoNotOptimize(F(n, x, k));
    }
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FTableCold)->DenseRange(8, 20, 4)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_FTableWarm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (int x = 0; x <= n; ++x) {
    for (int k = 0; k <= x; ++k) F(n, x, k);
  }
  for (auto _ : state) {
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) benchmark::DoNotOptimize(F(n, x, k));
    }
  }
}
BENCHMARK(BM_FTableWarm)->DenseRange(8, 20, 4)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_OracleTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(n, false));
  state.SetComplexityN(n);
}
BENCHMARK(BM_OracleTable)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_FHatTableCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    runcount_cache::clear();
    palindromic_cache::clear();
    for (int x = 0; x <= n; ++x) {
      for (int k = 0; k <= x; ++k) benchmark::DoNotOptimize(F_hat(n, x, k));
    }
  }
}
BENCHMARK(BM_FHatTableCold)->Arg(20)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_OraclePalindromicTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(n, true));
}
BENCHMARK(BM_OraclePalindromicTable)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_PartitionClassesCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    compositions_cache::clear();
    benchmark::DoNotOptimize(P_total(n));
  }
}
BENCHMARK(BM_PartitionClassesCold)->Arg(14)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_OraclePartitionTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_partition_table(n, false));
}
BENCHMARK(BM_OraclePartitionTable)->Arg(14)->Unit(benchmark::kMicrosecond);

void BM_MatrixProperties(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const CountMatrix m = build_matrix(n, MatrixKind::palindromic);
    benchmark::DoNotOptimize(is_idempotent(m));
  }
}
BENCHMARK(BM_MatrixProperties)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
