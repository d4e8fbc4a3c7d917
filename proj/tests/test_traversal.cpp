#include "helpers.hpp"

#include "tgt/paths.hpp"

#include <doctest.h>

#include <sstream>

using namespace tgt;

namespace {
constexpr OccId NO = NO_OCC;
}

TEST_CASE("id-ordered DFS on the worked example") {
  TemporalGraph g = load_fixture("g1.tel");
  TraversalResult r = dfs_v1(g, vid(g, "a"), 2);
  const TraversalTree& t = r.tree;

  check_occurrences(g, t,
                    {{"a", 2, NO}, {"b", 6, 0}, {"c", 7, 1}, {"f", 3, 0}, {"c", 5, 3}, {"g", 8, 3}});
  check_log(t, {
                   {eid(g, "a", "b", 6), EdgeLabel::Tree, 0},
                   {eid(g, "b", "a", 8), EdgeLabel::Backward, 1, 0},
                   {eid(g, "b", "c", 7), EdgeLabel::Tree, 1},
                   {eid(g, "a", "f", 3), EdgeLabel::Tree, 0},
                   {eid(g, "f", "c", 5), EdgeLabel::Tree, 3},
                   {eid(g, "c", "b", 6), EdgeLabel::Cross, 4},
                   {eid(g, "f", "g", 8), EdgeLabel::Tree, 3},
                   {eid(g, "g", "a", 9), EdgeLabel::Backward, 5, 0},
                   {eid(g, "a", "f", 7), EdgeLabel::Forward, 0},
               });

  CHECK(r.labels[eid(g, "a", "b", 1)] == EdgeLabel::NonTraversed);
  CHECK(r.labels[eid(g, "b", "c", 4)] == EdgeLabel::NonTraversed);
  CHECK(r.labels[eid(g, "f", "h", 2)] == EdgeLabel::NonTraversed);
  CHECK(t.counters.edges_traversed == 9);
  CHECK(t.counters.edges_scanned <= g.num_edges());

  auto cycles = extract_cycles(t, g);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<EdgeId>{eid(g, "a", "b", 6), eid(g, "b", "a", 8)});
  CHECK(cycles[1] == std::vector<EdgeId>{eid(g, "a", "f", 3), eid(g, "f", "g", 8),
                                         eid(g, "g", "a", 9)});
}

TEST_CASE("reverse-chronological DFS on the worked example") {
  TemporalGraph g = load_fixture("g1.tel");
  TraversalResult r = dfs_v2(g, vid(g, "a"), 2);
  const TraversalTree& t = r.tree;

  check_occurrences(g, t,
                    {{"a", 2, NO},
                     {"f", 7, 0},
                     {"g", 8, 1},
                     {"b", 6, 0},
                     {"c", 7, 3},
                     {"f", 3, 0},
                     {"c", 5, 5}});
  check_log(t, {
                   {eid(g, "a", "f", 7), EdgeLabel::Tree, 0},
                   {eid(g, "f", "g", 8), EdgeLabel::Tree, 1},
                   {eid(g, "g", "a", 9), EdgeLabel::Backward, 2, 0},
                   {eid(g, "a", "b", 6), EdgeLabel::Tree, 0},
                   {eid(g, "b", "a", 8), EdgeLabel::Backward, 3, 0},
                   {eid(g, "b", "c", 7), EdgeLabel::Tree, 3},
                   {eid(g, "a", "f", 3), EdgeLabel::Tree, 0},
                   {eid(g, "f", "c", 5), EdgeLabel::Tree, 5},
                   {eid(g, "c", "b", 6), EdgeLabel::Cross, 6},
               });

  auto cycles = extract_cycles(t, g);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<EdgeId>{eid(g, "a", "f", 7), eid(g, "f", "g", 8),
                                         eid(g, "g", "a", 9)});
  CHECK(cycles[1] == std::vector<EdgeId>{eid(g, "a", "b", 6), eid(g, "b", "a", 8)});

  // Two occurrences of f and c, one of everything else reached.
  CHECK(t.occurrences_of(vid(g, "f")) == std::vector<OccId>{1, 5});
  CHECK(t.occurrences_of(vid(g, "c")) == std::vector<OccId>{4, 6});
  CHECK(t.occurrences_of(vid(g, "h")).empty());
}

TEST_CASE("breadth-first traversal on the worked example") {
  TemporalGraph g = load_fixture("g1.tel");
  TraversalResult r = bfs(g, vid(g, "a"), 2);
  const TraversalTree& t = r.tree;

  check_occurrences(g, t, {{"a", 2, NO}, {"f", 3, 0}, {"b", 6, 0}, {"c", 5, 1}, {"g", 8, 1}});
  CHECK(t.occ[0].dist == 0);
  CHECK(t.occ[1].dist == 1);
  CHECK(t.occ[2].dist == 1);
  CHECK(t.occ[3].dist == 2);
  CHECK(t.occ[4].dist == 2);

  check_log(t, {
                   {eid(g, "a", "f", 3), EdgeLabel::Tree, 0},
                   {eid(g, "a", "b", 6), EdgeLabel::Tree, 0},
                   {eid(g, "a", "f", 7), EdgeLabel::NonTree, 0},
                   {eid(g, "f", "c", 5), EdgeLabel::Tree, 1},
                   {eid(g, "f", "g", 8), EdgeLabel::Tree, 1},
                   {eid(g, "b", "c", 7), EdgeLabel::NonTree, 2},
                   {eid(g, "b", "a", 8), EdgeLabel::NonTree, 2},
                   {eid(g, "c", "b", 6), EdgeLabel::NonTree, 3},
                   {eid(g, "g", "a", 9), EdgeLabel::NonTree, 4},
               });
  CHECK_THROWS_AS(extract_cycles(t, g), std::logic_error);
}

TEST_CASE("all kinds traverse the same edges and reach the same vertices") {
  TemporalGraph g = load_fixture("g1.tel");
  VertexId a = vid(g, "a");
  auto r1 = dfs_v1(g, a, 2), r2 = dfs_v2(g, a, 2), rb = bfs(g, a, 2);
  CHECK(r1.tree.log.size() == 9);
  CHECK(r2.tree.log.size() == 9);
  CHECK(rb.tree.log.size() == 9);

  auto traversed = [&](const TraversalResult& r) {
    std::vector<bool> bm(g.num_edges(), false);
    for (auto& le : r.tree.log) bm[le.edge] = true;
    return bm;
  };
  CHECK(traversed(r1) == traversed(r2));
  CHECK(traversed(r1) == traversed(rb));

  auto reach = reachable_set(r1.tree);
  CHECK(reach == reachable_set(r2.tree));
  CHECK(reach == reachable_set(rb.tree));
  std::vector<VertexId> expect{vid(g, "a"), vid(g, "b"), vid(g, "c"), vid(g, "f"), vid(g, "g")};
  CHECK(reach == expect);

  // h is reachable only when timestamps are ignored.
  auto stat = static_reachable_set(project_static(g), a);
  CHECK(stat.size() == 6);
}

TEST_CASE("breadth-first record bookkeeping on the second example") {
  TemporalGraph g = load_fixture("g5.tel");
  TraversalResult r = bfs(g, vid(g, "a"), 0);
  const TraversalTree& t = r.tree;

  check_occurrences(g, t,
                    {{"a", 0, NO}, {"b", 2, 0}, {"c", 4, 0}, {"f", 7, 0}, {"f", 3, 1}, {"g", 3, 4}});
  CHECK(t.occ[3].dist == 1);
  CHECK(t.occ[4].dist == 2);
  CHECK(t.occ[5].dist == 3);
  CHECK(t.occurrences_of(vid(g, "f")) == std::vector<OccId>{3, 4});

  // (c,f,5) is consumed but dead-ends against the fresher record of f.
  CHECK(r.labels[eid(g, "c", "f", 5)] == EdgeLabel::NonTree);
  CHECK(t.log.size() == 6);
}

TEST_CASE("in-place update moves the entry edge and relabels the displaced one") {
  std::istringstream in("s a 1\ns b 2\na c 5\nb c 3\n");
  TemporalGraph g = load_edge_list(in);
  TraversalResult r = bfs(g, vid(g, "s"), 0);
  const TraversalTree& t = r.tree;

  check_occurrences(g, t, {{"s", 0, NO}, {"a", 1, 0}, {"b", 2, 0}, {"c", 3, 2}});
  CHECK(t.occ[3].dist == 2);
  CHECK(t.occ[3].entry == eid(g, "b", "c", 3));
  CHECK(r.labels[eid(g, "a", "c", 5)] == EdgeLabel::NonTree);  // displaced by the update
  CHECK(r.labels[eid(g, "b", "c", 3)] == EdgeLabel::Tree);
}

TEST_CASE("start time beyond every edge yields a bare root") {
  TemporalGraph g = load_fixture("g1.tel");
  for (TraversalKind k : {TraversalKind::DFS_V1, TraversalKind::DFS_V2, TraversalKind::BFS}) {
    TraversalTree t = traverse(g, k, vid(g, "a"), 100);
    CHECK(t.occ.size() == 1);
    CHECK(t.log.empty());
    CHECK(reachable_set(t) == std::vector<VertexId>{vid(g, "a")});
  }
}

TEST_CASE("label scheme contract") {
  TemporalGraph g = load_fixture("g1.tel");
  TraversalTree dfs_tree = traverse(g, TraversalKind::DFS_V1, vid(g, "a"), 2);
  TraversalTree bfs_tree = traverse(g, TraversalKind::BFS, vid(g, "a"), 2);
  CHECK_NOTHROW(classify_edges(dfs_tree, g, LabelScheme::FiveWay));
  CHECK_NOTHROW(classify_edges(bfs_tree, g, LabelScheme::ThreeWay));
  CHECK_THROWS_AS(classify_edges(bfs_tree, g, LabelScheme::FiveWay), std::logic_error);
  CHECK_THROWS_AS(classify_edges(dfs_tree, g, LabelScheme::ThreeWay), std::logic_error);
}

TEST_CASE("bad source is rejected") {
  TemporalGraph g = load_fixture("g1.tel");
  CHECK_THROWS_AS(traverse(g, TraversalKind::BFS, 99, 0), DomainError);
}

TEST_CASE("log-free traversal builds the identical tree") {
  for (const char* fixture : {"g1.tel", "g5.tel"}) {
    TemporalGraph g = load_fixture(fixture);
    for (TraversalKind k : {TraversalKind::DFS_V1, TraversalKind::DFS_V2, TraversalKind::BFS}) {
      for (VertexId s = 0; s < g.num_vertices(); ++s) {
        for (Timestamp t_s : {Timestamp{0}, Timestamp{2}, Timestamp{5}}) {
          CAPTURE(fixture);
          CAPTURE(static_cast<int>(k));
          CAPTURE(s);
          CAPTURE(t_s);
          TraversalTree full = traverse(g, k, s, t_s);
          TraversalTree lean = traverse_tree(g, k, s, t_s);

          CHECK(lean.log.empty());
          REQUIRE(lean.occ.size() == full.occ.size());
          for (size_t i = 0; i < full.occ.size(); ++i) {
            CHECK(lean.occ[i].vertex == full.occ[i].vertex);
            CHECK(lean.occ[i].sigma == full.occ[i].sigma);
            CHECK(lean.occ[i].parent == full.occ[i].parent);
            CHECK(lean.occ[i].entry == full.occ[i].entry);
            CHECK(lean.occ[i].dist == full.occ[i].dist);
            CHECK(lean.occ[i].prev_same_vertex == full.occ[i].prev_same_vertex);
          }
          CHECK(lean.first_occ == full.first_occ);
          CHECK(lean.last_occ == full.last_occ);
          CHECK(lean.counters.edges_scanned == full.counters.edges_scanned);
          CHECK(lean.counters.edges_traversed == full.counters.edges_traversed);
          CHECK(lean.counters.search_probes == full.counters.search_probes);
          CHECK(lean.counters.pair_probes == full.counters.pair_probes);
        }
      }
    }
  }
}
