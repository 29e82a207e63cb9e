#include <benchmark/benchmark.h>

#include "lincomp/audit.hpp"
#include "lincomp/corpus.hpp"
#include "lincomp/det_oracle.hpp"
#include "lincomp/forestcalc.hpp"
#include "lincomp/ident_engine.hpp"

using namespace lincomp;

namespace {

// Complete digraph with a leak at 2: the densest forest workload per n.
Model complete(int n) {
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) edges.push_back({a, b});
  return Model(n, edges, {1}, {1}, {n >= 2 ? 2 : 1});
}

void BM_ForestEquation(benchmark::State& state) {
  const Model m = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forest_io_equation(m, 1));
}
BENCHMARK(BM_ForestEquation)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_DeterminantEquation(benchmark::State& state) {
  const Model m = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(io_equation(m, 1));
}
BENCHMARK(BM_DeterminantEquation)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_LeibnizCharPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymMatrix a = compartmental_matrix(complete(n));
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_minor_leibniz(a, all, all));
}
BENCHMARK(BM_LeibnizCharPoly)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_GenericRank(benchmark::State& state) {
  const CoefficientMap cm = coefficient_map(catenary(static_cast<int>(state.range(0)), {1}, {2}, {1}));
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(cm, 3, 20240101));
}
BENCHMARK(BM_GenericRank)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_DecideCatenary(benchmark::State& state) {
  const Model m = catenary(static_cast<int>(state.range(0)), {1}, {2}, {1});
  AnalysisOptions opts;
  opts.force_rank = true;
  for (auto _ : state) benchmark::DoNotOptimize(decide_identifiability(m, opts));
}
BENCHMARK(BM_DecideCatenary)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_SweepTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_trees(static_cast<int>(state.range(0)), {}));
}
BENCHMARK(BM_SweepTrees)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
