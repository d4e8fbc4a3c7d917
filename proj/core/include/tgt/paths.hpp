#pragma once

#include "tgt/graph.hpp"
#include "tgt/traversal.hpp"

#include <optional>
#include <vector>

namespace tgt {

// Single-source temporal path queries, all answered from one traversal tree:
//   foremost: minimize arrival time (earliest reachability)
//   fastest:  minimize duration t_end - t_start within a start/end window
//   shortest: minimize hop count
// Paths are materialized lazily from parent links (tree_path).

struct PathAnswer {
  std::vector<EdgeId> edges;  // source -> target in traversal order
  Timestamp t_start = 0;      // first edge's timestamp (t_s for the empty path)
  Timestamp t_end = 0;        // last edge's timestamp
  size_t hops() const { return edges.size(); }
};

// Root path of an occurrence. The empty path (occurrence is the root) uses
// t_start = t_end = tree.t_s.
PathAnswer tree_path(const TraversalTree& tree, OccId target, const TemporalGraph& g);

// Structural check used by tests: consecutive edges chain src->...->target,
// timestamps never decrease, the first one is >= min_start.
std::optional<std::string> check_path(const TemporalGraph& g, const PathAnswer& p,
                                      VertexId source, VertexId target, Timestamp min_start);

enum class PathEngine : uint8_t { DFS_V1, BFS };

struct ForemostPaths {
  TraversalTree tree;
  std::vector<OccId> best;  // per vertex: minimum-sigma occurrence, NO_OCC if unreached
  bool has(VertexId v) const { return best[v] != NO_OCC; }
  Timestamp arrival(VertexId v) const { return tree.occ[best[v]].sigma; }
};

// Earliest arrival at every vertex starting from `source` no earlier than
// t_s. The BFS engine's answers additionally use the fewest hops among all
// earliest-arrival paths.
ForemostPaths foremost_paths(const TemporalGraph& g, VertexId source, Timestamp t_s,
                             PathEngine engine);

// Per-vertex active intervals [t_start, t_end] of the reverse-chronological
// DFS tree's occurrences, in creation order with duplicated t_start collapsed
// onto the smaller t_end. Both columns end up strictly decreasing, which is
// what makes window queries a prefix/suffix intersection and
// earliest-arrival-from-t a binary search.
struct OccurrenceIndex {
  struct Entry {
    Timestamp t_start;
    Timestamp t_end;
    OccId occ;
  };
  VertexId source = NO_VERTEX;
  Timestamp t_s = 0;
  size_t n = 0;
  std::vector<uint32_t> offsets;  // n+1
  std::vector<Entry> entries;
  std::pair<uint32_t, uint32_t> row(VertexId v) const { return {offsets[v], offsets[v + 1]}; }
};

// Requires a DFS_V2 tree (contract violation otherwise). The source vertex
// has an empty row; its zero-hop path is handled by query conventions.
OccurrenceIndex build_occurrence_index(const TraversalTree& tree);

// Empty if the double monotonicity holds, else problem descriptions.
std::vector<std::string> validate_occurrence_index(const OccurrenceIndex& idx);

struct FastestPaths {
  std::vector<OccId> best;        // NO_OCC where no occurrence fits the window
  std::vector<Timestamp> duration;
  bool has(VertexId v) const { return best[v] != NO_OCC; }
};

// Minimum duration over occurrences with t_start >= t_x and t_end <= t_y;
// duration ties keep the earliest-created occurrence. The source answers with
// duration 0. Requires t_s <= t_x <= t_y.
FastestPaths fastest_paths(const OccurrenceIndex& idx, Timestamp t_x, Timestamp t_y);

struct ForemostFrom {
  std::vector<OccId> best;
  std::vector<Timestamp> arrival;
  bool has(VertexId v) const { return best[v] != NO_OCC; }
};

// Earliest arrival over paths departing at or after t, answered per vertex by
// binary search on the index (no re-traversal). Requires t >= t_s. The source
// answers with arrival t.
ForemostFrom foremost_from(const OccurrenceIndex& idx, Timestamp t);

struct ShortestPaths {
  TraversalTree tree;
  std::vector<OccId> best;  // first occurrence = fewest hops
  bool has(VertexId v) const { return best[v] != NO_OCC; }
  uint32_t hops(VertexId v) const { return tree.occ[best[v]].dist; }
};

// Fewest hops to every vertex reachable from `source` at start time t_s.
ShortestPaths shortest_paths(const TemporalGraph& g, VertexId source, Timestamp t_s);

}  // namespace tgt
