#include <benchmark/benchmark.h>

#include "hrlb/constructions.hpp"
#include "hrlb/counting.hpp"

using namespace hrlb;

static void BM_CountTrianglesInRsGraph(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  auto inst = rs_simplex(3, n, behrend_set(n / 3, 3));
  auto k3 = complete_kgraph(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_copies(inst.graph, k3).count);
  state.counters["copies"] = static_cast<double>(inst.placed.size());
}
BENCHMARK(BM_CountTrianglesInRsGraph)->Arg(60)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

static void BM_CountK43InSimplex(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  auto inst = rs_simplex(4, n, behrend_set(n / 4, 3));
  auto f = complete_kgraph(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(count_copies(inst.graph, f).count);
}
BENCHMARK(BM_CountK43InSimplex)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_CanonicalPentagons(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  auto inst = rs_graph(cycle_graph(5), n, behrend_set(n / 5, 5));
  auto c5 = cycle_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(count_canonical_copies(inst, c5).count);
}
BENCHMARK(BM_CanonicalPentagons)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EdgeDisjointScan(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  auto inst = rs_simplex(4, n, behrend_set(n / 4, 3));
  auto f = complete_kgraph(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_edge_disjoint(f, inst.placed).ok);
}
BENCHMARK(BM_EdgeDisjointScan)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
