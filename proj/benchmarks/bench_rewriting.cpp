#include <benchmark/benchmark.h>

#include "siltkit/constructions.hpp"

using namespace siltkit;

static void BM_NormalizeNakayama(benchmark::State& state) {
  auto pres = nakayama_cyclic((int)state.range(0), 4);
  for (auto _ : state) {
    auto rs = normalize(pres);
    benchmark::DoNotOptimize(rs.rules.size());
  }
}
BENCHMARK(BM_NormalizeNakayama)->Arg(6)->Arg(12)->Arg(20);

static void BM_BasisBuild(benchmark::State& state) {
  auto pres = nakayama_cyclic((int)state.range(0), 5);
  for (auto _ : state) {
    auto A = AlgebraBasis::build(pres);
    benchmark::DoNotOptimize(A->dimension());
  }
}
BENCHMARK(BM_BasisBuild)->Arg(6)->Arg(12);

static void BM_BasisBuildCanonical(benchmark::State& state) {
  auto pres = extended_canonical_246();
  for (auto _ : state) {
    auto A = AlgebraBasis::build(pres);
    benchmark::DoNotOptimize(A->dimension());
  }
}
BENCHMARK(BM_BasisBuildCanonical);

static void BM_Truncate(benchmark::State& state) {
  auto A = AlgebraBasis::build(nakayama_cyclic(11, 3));
  std::vector<int> S{0, 1, 2, 3, 4, 5, 6, 7, 8};
  for (auto _ : state) {
    auto t = truncate_full(*A, S);
    benchmark::DoNotOptimize(t.pres.relations.size());
  }
}
BENCHMARK(BM_Truncate);

BENCHMARK_MAIN();
