#include <benchmark/benchmark.h>

#include "siltkit/constructions.hpp"
#include "siltkit/explorer.hpp"
#include "siltkit/oracle.hpp"

using namespace siltkit;

static void BM_HomTableLadder(benchmark::State& state) {
  auto A = AlgebraBasis::build(ladder((int)state.range(0)));
  auto L = ProjComplex::free_module(A);
  for (auto _ : state) {
    auto t = hom_table(L, L);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_HomTableLadder)->Arg(2)->Arg(4);

static void BM_EnumeratePentagon(benchmark::State& state) {
  auto A = AlgebraBasis::build(fixture("a2-path"));
  for (auto _ : state) {
    auto p = enumerate_interval(A, 2, 50);
    benchmark::DoNotOptimize(p.nodes.size());
  }
}
BENCHMARK(BM_EnumeratePentagon);

static void BM_EnumerateA3(benchmark::State& state) {
  auto A = AlgebraBasis::build(fixture("a3-path"));
  for (auto _ : state) {
    auto p = enumerate_interval(A, 2, 50);
    benchmark::DoNotOptimize(p.nodes.size());
  }
}
BENCHMARK(BM_EnumerateA3);

static void BM_KroneckerChain(benchmark::State& state) {
  auto A = AlgebraBasis::build(fixture("kronecker-quiver"));
  for (auto _ : state) {
    auto p = enumerate_interval(A, 2, (int)state.range(0));
    benchmark::DoNotOptimize(p.nodes.size());
  }
}
BENCHMARK(BM_KroneckerChain)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_OracleGridCell(benchmark::State& state) {
  auto pres = nakayama_cyclic(9, 3);
  OracleBudget b;
  b.r10_cap = 0;
  for (auto _ : state) {
    auto v = verdict(pres, {}, b);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(BM_OracleGridCell)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
