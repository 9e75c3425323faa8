#include <benchmark/benchmark.h>

#include "nestfock/basis_change.hpp"
#include "nestfock/incidence.hpp"
#include "nestfock/matrix.hpp"

using namespace nestfock;

// Each iteration starts from an empty memo so the whole chain is timed.

static void BM_PairsWithHooks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Integer total = 0;
    for (const auto& p : enumerate_incidence_pairs(n)) total += h_pair(p);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(enumerate_incidence_pairs(n).size()));
}
BENCHMARK(BM_PairsWithHooks)->DenseRange(4, 12, 2);

static void BM_CurveClassesInMonomials(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_basis_memo();
    benchmark::DoNotOptimize(transition(Basis::b3, Basis::b2, n));
  }
}
BENCHMARK(BM_CurveClassesInMonomials)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_CurveClassesInFixedPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_basis_memo();
    benchmark::DoNotOptimize(b3_in_b1(n));
  }
}
BENCHMARK(BM_CurveClassesInFixedPoints)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_MonomialsInFixedPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_basis_memo();
    benchmark::DoNotOptimize(b2_in_b1(n));
  }
}
BENCHMARK(BM_MonomialsInFixedPoints)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_FixedPointsInMonomials(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_basis_memo();
    benchmark::DoNotOptimize(b1_in_b2(n));
  }
}
BENCHMARK(BM_FixedPointsInMonomials)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_FixedPointCreation(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_basis_memo();
    benchmark::DoNotOptimize(b1_creation(1, d));
  }
}
BENCHMARK(BM_FixedPointCreation)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
