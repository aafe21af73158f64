#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "pvc/approx.hpp"
#include "pvc/exact.hpp"
#include "pvc/planar.hpp"

namespace {

pvc::Hypergraph instance(int n, int m) {
  return pvc::gen::random_twin_free_hypergraph(n, m, 0.4, 11);
}

void BM_CountClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const pvc::Hypergraph h = instance(n, 4 * n);
  pvc::gen::Rng rng(5);
  pvc::VertexSet s(n);
  for (int v = 0; v < n; ++v) s[v] = pvc::gen::coin(rng, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(pvc::count_classes(h, s));
}
BENCHMARK(BM_CountClasses)->Arg(16)->Arg(64)->Arg(256);

void BM_Greedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const pvc::Hypergraph h = instance(n, 4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(pvc::greedy_classes(h, 6).value);
}
BENCHMARK(BM_Greedy)->Arg(16)->Arg(64)->Arg(256);

void BM_ExactMax(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const pvc::Hypergraph h = instance(14, 40);
  for (auto _ : state) benchmark::DoNotOptimize(pvc::solve_max_partial_vc(h, k).value);
}
BENCHMARK(BM_ExactMax)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_VcDimension(benchmark::State& state) {
  const pvc::Hypergraph h = instance(14, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pvc::vc_dimension(h).value);
}
BENCHMARK(BM_VcDimension)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_ApproxVcDimension(benchmark::State& state) {
  const pvc::Hypergraph h = instance(14, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pvc::approx_max_vc_dimension(h).dimension);
}
BENCHMARK(BM_ApproxVcDimension)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_BakerMax(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const pvc::LeveledPlanarGraph lg = pvc::gen::leveled_grid(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(pvc::baker_max_partial_vc(lg, 3, 1.0).result.value);
}
BENCHMARK(BM_BakerMax)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
