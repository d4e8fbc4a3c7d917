// Tree-based query answering vs the conventional per-query algorithms.
#include "tgt/graph.hpp"
#include "tgt/oracle.hpp"
#include "tgt/paths.hpp"

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

tgt::VertexId next_source(const tgt::TemporalGraph& g, tgt::VertexId& s) {
  s = tgt::VertexId((s + 1) % g.num_vertices());
  return s;
}

void BM_foremost_tree(benchmark::State& state) {
  const auto& g = graph_with_edges(size_t(state.range(0)));
  tgt::VertexId s = 0;
  for (auto _ : state) {
    auto fp = tgt::foremost_paths(g, next_source(g, s), 0, tgt::PathEngine::BFS);
    benchmark::DoNotOptimize(fp.best.data());
  }
}

void BM_foremost_baseline(benchmark::State& state) {
  const auto& g = graph_with_edges(size_t(state.range(0)));
  tgt::VertexId s = 0;
  for (auto _ : state) {
    auto arr = tgt::baseline_foremost(g, next_source(g, s), 0);
    benchmark::DoNotOptimize(arr.data());
  }
}

void BM_fastest_tree(benchmark::State& state) {
  const auto& g = graph_with_edges(size_t(state.range(0)));
  tgt::VertexId s = 0;
  for (auto _ : state) {
    auto tree = tgt::traverse(g, tgt::TraversalKind::DFS_V2, next_source(g, s), 0);
    auto idx = tgt::build_occurrence_index(tree);
    auto fp = tgt::fastest_paths(idx, 0, tgt::T_INF);
    benchmark::DoNotOptimize(fp.best.data());
  }
}

void BM_fastest_baseline(benchmark::State& state) {
  const auto& g = graph_with_edges(size_t(state.range(0)));
  tgt::VertexId s = 0;
  for (auto _ : state) {
    auto dur = tgt::baseline_fastest(g, next_source(g, s), 0);
    benchmark::DoNotOptimize(dur.data());
  }
}

void BM_index_build(benchmark::State& state) {
  const auto& g = graph_with_edges(size_t(state.range(0)));
  tgt::TraversalTree tree = tgt::traverse(g, tgt::TraversalKind::DFS_V2, 0, 0);
  for (auto _ : state) {
    auto idx = tgt::build_occurrence_index(tree);
    benchmark::DoNotOptimize(idx.entries.data());
  }
}

}  // namespace

BENCHMARK(BM_foremost_tree)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_foremost_baseline)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fastest_tree)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fastest_baseline)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_index_build)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
