#include <benchmark/benchmark.h>

#include "qexcess/excess.hpp"
#include "qexcess/fixtures.hpp"
#include "qexcess/graphdual.hpp"
#include "qexcess/harmonic.hpp"
#include "qexcess/orthopoly.hpp"
#include "qexcess/pointset.hpp"
#include "qexcess/scheme.hpp"

using namespace qexcess;

namespace {

void run_pipeline(const Matrix& X, benchmark::State& state) {
  const ToleranceConfig cfg;
  for (auto _ : state) {
    const PointSet ps = load_pointset(X, cfg, false);
    const auto prof = inner_product_profile(ps, cfg);
    const auto G = normalized_gram(ps, prof);
    const auto seq = predegree_sequence(prof, ps.m(), cfg);
    const auto hd = harmonic_decomposition(ps, G, cfg);
    auto rep = excess_report(ps, prof, G, seq, hd, cfg);
    benchmark::DoNotOptimize(rep);
  }
  state.counters["n"] = static_cast<double>(X.rows());
}

void BM_CrossPolytope(benchmark::State& state) {
  run_pipeline(fixtures::cross_polytope(static_cast<int>(state.range(0))), state);
}
BENCHMARK(BM_CrossPolytope)->DenseRange(3, 24, 7)->Unit(benchmark::kMillisecond);

void BM_Hypercube(benchmark::State& state) {
  run_pipeline(fixtures::hypercube(static_cast<int>(state.range(0))), state);
}
BENCHMARK(BM_Hypercube)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_EigenStructureHypercube(benchmark::State& state) {
  const ToleranceConfig cfg;
  const PointSet ps = load_pointset(fixtures::hypercube(static_cast<int>(state.range(0))), cfg, false);
  const auto sch = *verify_scheme(inner_product_profile(ps, cfg).class_of).scheme;
  for (auto _ : state) {
    auto es = eigen_structure(sch, cfg);
    benchmark::DoNotOptimize(es);
  }
}
BENCHMARK(BM_EigenStructureHypercube)->DenseRange(3, 6, 1)->Unit(benchmark::kMillisecond);

void BM_CubicSearch(benchmark::State& state) {
  for (auto _ : state) {
    auto graphs = connected_cubic_graphs(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(graphs);
  }
}
BENCHMARK(BM_CubicSearch)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
