#include "helpers.hpp"

#include "tgt/paths.hpp"

#include <doctest.h>

using namespace tgt;

namespace {

OccurrenceIndex g1_index(const TemporalGraph& g) {
  return build_occurrence_index(traverse(g, TraversalKind::DFS_V2, g.vertex("a").value(), 2));
}

}  // namespace

TEST_CASE("interval index of the worked example") {
  TemporalGraph g = load_fixture("g1.tel");
  OccurrenceIndex idx = g1_index(g);
  CHECK(validate_occurrence_index(idx).empty());

  auto row = [&](const char* label) {
    auto [lo, hi] = idx.row(vid(g, label));
    std::vector<std::pair<Timestamp, Timestamp>> out;
    for (uint32_t i = lo; i < hi; ++i) out.emplace_back(idx.entries[i].t_start, idx.entries[i].t_end);
    return out;
  };
  using P = std::vector<std::pair<Timestamp, Timestamp>>;
  CHECK(row("a") == P{});  // source row stays empty by convention
  CHECK(row("b") == P{{6, 6}});
  CHECK(row("c") == P{{6, 7}, {3, 5}});
  CHECK(row("f") == P{{7, 7}, {3, 3}});
  CHECK(row("g") == P{{7, 8}});
  CHECK(row("h") == P{});

  TraversalTree v1 = traverse(g, TraversalKind::DFS_V1, vid(g, "a"), 2);
  CHECK_THROWS_AS(build_occurrence_index(v1), std::logic_error);
}

TEST_CASE("minimum-duration window queries") {
  TemporalGraph g = load_fixture("g1.tel");
  OccurrenceIndex idx = g1_index(g);

  FastestPaths open = fastest_paths(idx, 2, T_INF);
  CHECK(open.duration[vid(g, "a")] == 0);
  CHECK(open.duration[vid(g, "b")] == 0);
  CHECK(open.duration[vid(g, "c")] == 1);
  CHECK(open.duration[vid(g, "f")] == 0);
  CHECK(open.duration[vid(g, "g")] == 1);
  CHECK_FALSE(open.has(vid(g, "h")));

  FastestPaths mid = fastest_paths(idx, 4, 7);
  CHECK(mid.duration[vid(g, "c")] == 1);  // via (6,7); the faster start at 3 ends too early
  CHECK(mid.duration[vid(g, "b")] == 0);
  CHECK(mid.duration[vid(g, "f")] == 0);
  CHECK_FALSE(mid.has(vid(g, "g")));

  FastestPaths low = fastest_paths(idx, 2, 5);
  CHECK(low.duration[vid(g, "c")] == 2);
  CHECK(low.duration[vid(g, "f")] == 0);
  CHECK_FALSE(low.has(vid(g, "b")));

  FastestPaths late = fastest_paths(idx, 7, 9);
  CHECK(late.duration[vid(g, "f")] == 0);
  CHECK(late.duration[vid(g, "g")] == 1);
  CHECK_FALSE(late.has(vid(g, "c")));

  CHECK_THROWS_AS(fastest_paths(idx, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(fastest_paths(idx, 1, 9), std::invalid_argument);  // window opens before t_s
}

TEST_CASE("earliest arrival for a later departure") {
  TemporalGraph g = load_fixture("g1.tel");
  OccurrenceIndex idx = g1_index(g);

  ForemostFrom f2 = foremost_from(idx, 2);
  CHECK(f2.arrival[vid(g, "a")] == 2);
  CHECK(f2.arrival[vid(g, "c")] == 5);
  CHECK(f2.arrival[vid(g, "b")] == 6);

  ForemostFrom f4 = foremost_from(idx, 4);
  CHECK(f4.arrival[vid(g, "c")] == 7);
  CHECK(f4.arrival[vid(g, "b")] == 6);
  CHECK(f4.arrival[vid(g, "f")] == 7);
  CHECK(f4.arrival[vid(g, "g")] == 8);

  ForemostFrom f7 = foremost_from(idx, 7);
  CHECK_FALSE(f7.has(vid(g, "c")));
  CHECK_FALSE(f7.has(vid(g, "b")));
  CHECK(f7.arrival[vid(g, "f")] == 7);
  CHECK(f7.arrival[vid(g, "g")] == 8);
  CHECK(f7.arrival[vid(g, "a")] == 7);  // zero-hop convention

  CHECK_THROWS_AS(foremost_from(idx, 1), std::invalid_argument);
}

TEST_CASE("earliest arrival from the start time, both engines") {
  TemporalGraph g = load_fixture("g1.tel");
  VertexId a = vid(g, "a");
  ForemostPaths fb = foremost_paths(g, a, 2, PathEngine::BFS);
  ForemostPaths fd = foremost_paths(g, a, 2, PathEngine::DFS_V1);

  CHECK(fb.arrival(a) == 2);
  CHECK(fb.arrival(vid(g, "f")) == 3);
  CHECK(fb.arrival(vid(g, "b")) == 6);
  CHECK(fb.arrival(vid(g, "c")) == 5);
  CHECK(fb.arrival(vid(g, "g")) == 8);
  CHECK_FALSE(fb.has(vid(g, "h")));

  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    CHECK(fb.has(v) == fd.has(v));
    if (fb.has(v)) CHECK(fb.arrival(v) == fd.arrival(v));
  }

  // BFS breaks arrival ties with the fewest hops.
  CHECK(fb.tree.occ[fb.best[vid(g, "c")]].dist == 2);
  CHECK(fb.tree.occ[fb.best[vid(g, "g")]].dist == 2);

  // Materialized paths are structurally sound and end on time.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!fb.has(v)) continue;
    PathAnswer p = tree_path(fb.tree, fb.best[v], g);
    CHECK(check_path(g, p, a, v, 2) == std::nullopt);
    if (v != a) CHECK(p.t_end == fb.arrival(v));
  }
  PathAnswer root = tree_path(fb.tree, 0, g);
  CHECK(root.hops() == 0);
  CHECK(root.t_start == 2);
  CHECK(root.t_end == 2);
}

TEST_CASE("fewest hops") {
  TemporalGraph g5 = load_fixture("g5.tel");
  ShortestPaths s = shortest_paths(g5, vid(g5, "a"), 0);
  CHECK(s.hops(vid(g5, "a")) == 0);
  CHECK(s.hops(vid(g5, "b")) == 1);
  CHECK(s.hops(vid(g5, "c")) == 1);
  CHECK(s.hops(vid(g5, "f")) == 1);
  CHECK(s.hops(vid(g5, "g")) == 3);  // only b@2 -> f@3 -> g@3 arrives in time

  TemporalGraph g1 = load_fixture("g1.tel");
  ShortestPaths s1 = shortest_paths(g1, vid(g1, "a"), 2);
  CHECK(s1.hops(vid(g1, "b")) == 1);
  CHECK(s1.hops(vid(g1, "f")) == 1);
  CHECK(s1.hops(vid(g1, "c")) == 2);
  CHECK(s1.hops(vid(g1, "g")) == 2);
  CHECK_FALSE(s1.has(vid(g1, "h")));

  for (VertexId v = 0; v < g1.num_vertices(); ++v) {
    if (!s1.has(v)) continue;
    PathAnswer p = tree_path(s1.tree, s1.best[v], g1);
    CHECK(p.hops() == s1.hops(v));
    CHECK(check_path(g1, p, vid(g1, "a"), v, 2) == std::nullopt);
  }
}

TEST_CASE("path checker flags broken chains") {
  TemporalGraph g = load_fixture("g1.tel");
  PathAnswer p;
  p.edges = {eid(g, "a", "b", 6), eid(g, "f", "c", 5)};  // b != f, and time runs backwards
  p.t_start = 6;
  p.t_end = 5;
  CHECK(check_path(g, p, vid(g, "a"), vid(g, "c"), 2) != std::nullopt);

  PathAnswer ok;
  ok.edges = {eid(g, "a", "f", 3), eid(g, "f", "c", 5)};
  ok.t_start = 3;
  ok.t_end = 5;
  CHECK(check_path(g, ok, vid(g, "a"), vid(g, "c"), 2) == std::nullopt);
  CHECK(check_path(g, ok, vid(g, "a"), vid(g, "c"), 4) != std::nullopt);  // departs too early
}
