// Microbenchmarks for the three traversal engines. Sources rotate so repeated
// iterations don't just replay one cache-resident tree.
#include "tgt/graph.hpp"
#include "tgt/traversal.hpp"

#include <benchmark/benchmark.h>

#include <map>

namespace {

const tgt::TemporalGraph& graph_with_edges(size_t m) {
  static std::map<size_t, tgt::TemporalGraph> cache;
  auto it = cache.find(m);
  if (it == cache.end())
    it = cache.emplace(m, tgt::generate_random(uint32_t(m / 10), m, 1000, 7)).first;
  return it->second;
}

void run_traversal(benchmark::State& state, tgt::TraversalKind kind) {
  const tgt::TemporalGraph& g = graph_with_edges(size_t(state.range(0)));
  tgt::VertexId s = 0;
  int64_t edges = 0;
  for (auto _ : state) {
    tgt::TraversalTree t = tgt::traverse(g, kind, s, 0);
    benchmark::DoNotOptimize(t.occ.data());
    edges += int64_t(t.counters.edges_scanned);
    s = tgt::VertexId((s + 1) % g.num_vertices());
  }
  state.SetItemsProcessed(edges);
}

void BM_dfs_v1(benchmark::State& state) { run_traversal(state, tgt::TraversalKind::DFS_V1); }
void BM_dfs_v2(benchmark::State& state) { run_traversal(state, tgt::TraversalKind::DFS_V2); }
void BM_bfs(benchmark::State& state) { run_traversal(state, tgt::TraversalKind::BFS); }

void BM_classify(benchmark::State& state) {
  const tgt::TemporalGraph& g = graph_with_edges(size_t(state.range(0)));
  tgt::TraversalTree t = tgt::traverse(g, tgt::TraversalKind::DFS_V2, 0, 0);
  for (auto _ : state) {
    auto labels = tgt::classify_edges(t, g);
    benchmark::DoNotOptimize(labels.data());
  }
  state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(g.num_edges()));
}

}  // namespace

BENCHMARK(BM_dfs_v1)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dfs_v2)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bfs)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classify)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
