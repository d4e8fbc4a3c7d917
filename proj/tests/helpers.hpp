#pragma once

#include "tgt/graph.hpp"
#include "tgt/traversal.hpp"

#include <doctest.h>

#include <string>

inline tgt::TemporalGraph load_fixture(const std::string& name) {
  return tgt::load_edge_list_file(std::string(TGT_DATA_DIR) + "/" + name);
}

inline tgt::VertexId vid(const tgt::TemporalGraph& g, const std::string& label) {
  auto v = g.vertex(label);
  REQUIRE(v.has_value());
  return *v;
}

inline tgt::EdgeId eid(const tgt::TemporalGraph& g, const std::string& src,
                       const std::string& dst, tgt::Timestamp t) {
  tgt::EdgeId e = g.find_edge(vid(g, src), vid(g, dst), t);
  REQUIRE(e != tgt::NO_EDGE);
  return e;
}

// Readable expectation rows for occurrence arrays and traversal logs.
struct OccExp {
  std::string vertex;
  tgt::Timestamp sigma;
  tgt::OccId parent;  // NO_OCC for the root
};

inline void check_occurrences(const tgt::TemporalGraph& g, const tgt::TraversalTree& tree,
                              const std::vector<OccExp>& exp) {
  REQUIRE(tree.occ.size() == exp.size());
  for (size_t i = 0; i < exp.size(); ++i) {
    CAPTURE(i);
    CHECK(g.label(tree.occ[i].vertex) == exp[i].vertex);
    CHECK(tree.occ[i].sigma == exp[i].sigma);
    CHECK(tree.occ[i].parent == exp[i].parent);
  }
}

struct LogExp {
  tgt::EdgeId edge;
  tgt::EdgeLabel label;
  tgt::OccId from;
  tgt::OccId ancestor = tgt::NO_OCC;
};

inline void check_log(const tgt::TraversalTree& tree, const std::vector<LogExp>& exp) {
  REQUIRE(tree.log.size() == exp.size());
  for (size_t i = 0; i < exp.size(); ++i) {
    CAPTURE(i);
    CHECK(tree.log[i].edge == exp[i].edge);
    CHECK(tree.log[i].label == exp[i].label);
    CHECK(tree.log[i].from_occ == exp[i].from);
    CHECK(tree.log[i].ancestor_occ == exp[i].ancestor);
  }
}
