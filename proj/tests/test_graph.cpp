#include "helpers.hpp"

#include <doctest.h>

#include <set>
#include <sstream>
#include <tuple>

using namespace tgt;

TEST_CASE("labels intern in first-appearance order") {
  TemporalGraph g = load_fixture("g1.tel");
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 12);
  CHECK(vid(g, "a") == 0);
  CHECK(vid(g, "b") == 1);
  CHECK(vid(g, "c") == 2);
  CHECK(vid(g, "f") == 3);
  CHECK(vid(g, "g") == 4);
  CHECK(vid(g, "h") == 5);
  CHECK(!g.vertex("zz").has_value());
  CHECK(g.label(3) == "f");
}

TEST_CASE("rows are chronological and pair runs ascend") {
  TemporalGraph g = load_fixture("g1.tel");
  auto [lo, hi] = g.row(vid(g, "a"));
  REQUIRE(hi - lo == 4);
  CHECK(g.edge_t(lo) == 1);
  CHECK(g.edge_t(lo + 1) == 3);
  CHECK(g.edge_t(lo + 2) == 6);
  CHECK(g.edge_t(lo + 3) == 7);
  CHECK(validate_graph(g).empty());

  CHECK(g.find_edge(vid(g, "a"), vid(g, "b"), 6) != NO_EDGE);
  CHECK(g.find_edge(vid(g, "a"), vid(g, "b"), 5) == NO_EDGE);
  CHECK(g.out_degree(vid(g, "a")) == 4);
  CHECK(g.static_out_degree(vid(g, "a")) == 2);
  CHECK(g.in_degree(vid(g, "a")) == 2);
  CHECK(g.in_degree(vid(g, "h")) == 1);
}

TEST_CASE("loader rejects malformed and duplicate input") {
  std::istringstream bad("a b\n");
  CHECK_THROWS_AS(load_edge_list(bad), ParseError);

  std::istringstream notnum("a b xyz\n");
  CHECK_THROWS_AS(load_edge_list(notnum), ParseError);

  std::istringstream dup("a b 1\na b 1\n");
  CHECK_THROWS_AS(load_edge_list(dup), DomainError);

  std::istringstream dup2("a b 1\na b 1\n");
  LoadOptions dd;
  dd.dedupe = true;
  LoadReport rep;
  TemporalGraph g = load_edge_list(dup2, dd, &rep);
  CHECK(g.num_edges() == 1);
  CHECK(rep.duplicates_dropped == 1);
}

TEST_CASE("self-loops are dropped and counted") {
  std::istringstream in("a a 1\na b 2\n");
  LoadReport rep;
  TemporalGraph g = load_edge_list(in, {}, &rep);
  CHECK(g.num_edges() == 1);
  CHECK(rep.self_loops_dropped == 1);
  CHECK(rep.lines_total == 2);
}

TEST_CASE("undirected load inserts both directions") {
  std::istringstream in("a b 1\nb c 2\n");
  LoadOptions o;
  o.directed = false;
  TemporalGraph g = load_edge_list(in, o);
  CHECK(g.num_edges() == 4);
  CHECK(g.find_edge(vid(g, "b"), vid(g, "a"), 1) != NO_EDGE);
  CHECK(g.find_edge(vid(g, "c"), vid(g, "b"), 2) != NO_EDGE);
}

TEST_CASE("koblenz rows take the last column as time") {
  std::istringstream in("% comment\n1 2 1.0 86400\n2 3 500\n");
  LoadOptions o;
  o.koblenz = true;
  TemporalGraph g = load_edge_list(in, o);
  CHECK(g.num_edges() == 2);
  CHECK(g.find_edge(vid(g, "1"), vid(g, "2"), 86400) != NO_EDGE);
  CHECK(g.find_edge(vid(g, "2"), vid(g, "3"), 500) != NO_EDGE);
}

TEST_CASE("round trip through write_edge_list") {
  TemporalGraph g = load_fixture("g1.tel");
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  TemporalGraph g2 = load_edge_list(in);
  REQUIRE(g2.num_edges() == g.num_edges());

  // Vertex ids are interning order, so edge numbering may shift; the labeled
  // triples are what round-trips.
  auto triples = [](const TemporalGraph& x) {
    std::set<std::tuple<std::string, std::string, Timestamp>> s;
    for (EdgeId e = 0; e < x.num_edges(); ++e)
      s.insert({x.label(x.edge_src(e)), x.label(x.edge_dst(e)), x.edge_t(e)});
    return s;
  };
  CHECK(triples(g2) == triples(g));
}

TEST_CASE("static projection lists distinct pairs once") {
  TemporalGraph g = load_fixture("g1.tel");
  StaticGraph s = project_static(g);
  CHECK(s.num_vertices() == 6);
  CHECK(s.num_edges() == 9);
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < s.num_vertices(); ++u)
    for (uint32_t k = s.offsets[u]; k < s.offsets[u + 1]; ++k)
      CHECK(pairs.insert({u, s.nbr[k]}).second);
  CHECK(pairs.count({vid(g, "f"), vid(g, "h")}) == 1);
}

TEST_CASE("random generation is deterministic, distinct, loop-free") {
  TemporalGraph a = generate_random(10, 120, 15, 7);
  TemporalGraph b = generate_random(10, 120, 15, 7);
  REQUIRE(a.num_edges() == 120);
  CHECK(validate_graph(a).empty());
  std::set<std::tuple<VertexId, VertexId, Timestamp>> seen;
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    CHECK(a.edge_src(e) != a.edge_dst(e));
    CHECK(a.edge_t(e) >= 0);
    CHECK(a.edge_t(e) <= 15);
    CHECK(seen.insert({a.edge_src(e), a.edge_dst(e), a.edge_t(e)}).second);
    CHECK(a.edge_src(e) == b.edge_src(e));
    CHECK(a.edge_dst(e) == b.edge_dst(e));
    CHECK(a.edge_t(e) == b.edge_t(e));
  }
  CHECK_THROWS_AS(generate_random(3, 100, 1, 1), DomainError);  // over capacity
  TemporalGraph full = generate_random(3, 12, 1, 9);            // exactly capacity
  CHECK(full.num_edges() == 12);
}

TEST_CASE("stats on the worked example") {
  TemporalGraph g = load_fixture("g1.tel");
  GraphStats s = compute_stats(g);
  CHECK(s.n == 6);
  CHECK(s.m == 12);
  CHECK(s.static_edges == 9);
  CHECK(s.d_avg_temporal == doctest::Approx(2.0));
  CHECK(s.d_max_temporal == 4);
  CHECK(s.d_avg_static == doctest::Approx(1.5));
  CHECK(s.d_max_static == 3);
  CHECK(s.d_avg_pair == doctest::Approx(12.0 / 9.0));
  CHECK(s.d_max_pair == 2);
  CHECK(s.snapshots == 9);
}

TEST_CASE("start-time fractions pick from the sorted distinct timestamps") {
  TemporalGraph g = load_fixture("g1.tel");
  auto dts = distinct_timestamps(g);
  REQUIRE(dts.size() == 9);
  CHECK(pick_ts_fraction(dts, 0.0) == 1);
  CHECK(pick_ts_fraction(dts, 0.25) == 3);
  CHECK(pick_ts_fraction(dts, 0.5) == 5);
  CHECK(pick_ts_fraction(dts, 0.75) == 7);
  CHECK(pick_ts_fraction(dts, 1.0) == 9);
  CHECK_THROWS_AS(pick_ts_fraction(dts, 1.5), DomainError);
  CHECK_THROWS_AS(pick_ts_fraction({}, 0.5), DomainError);
}
