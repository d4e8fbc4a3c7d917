#pragma once

#include "tgt/graph.hpp"
#include "tgt/types.hpp"

#include <optional>
#include <vector>

namespace tgt {

// Temporal traversals from a source at start time t_s. All three walk edges
// (u, v, t) only when t >= sigma(u), where sigma is the arrival time recorded
// when the tail's occurrence was created (t_s at the root). A vertex is
// re-visited (gets another occurrence) exactly when a traversal reaches it at
// a strictly smaller time, so every vertex's occurrences carry strictly
// decreasing sigma values.
//
//  DFS_V1: among out-neighbors with a feasible untraversed edge, take the
//          smallest dst id and traverse that pair's earliest such edge.
//  DFS_V2: traverse the feasible untraversed out-edge with the latest
//          timestamp (reverse-chronological cursor over the stored row).
//  BFS:    FIFO over occurrence records; a popped record consumes every
//          feasible untraversed out-edge in chronological order. Re-visits
//          either extend the frontier one level deeper or update the target's
//          newest pending record in place, so per-vertex occurrence depths
//          stay pairwise distinct.
enum class TraversalKind : uint8_t { DFS_V1, DFS_V2, BFS };

enum class EdgeLabel : uint8_t {
  NonTraversed = 0,
  Tree,
  Forward,   // DFS only: tail occurrence already an ancestor of the head
  Backward,  // DFS only: head occurrence on the active stack
  Cross,     // DFS only: traversed, none of the above
  NonTree,   // BFS only: traversed without becoming a final parent link
};

const char* edge_label_name(EdgeLabel l);

struct Occurrence {
  VertexId vertex = NO_VERTEX;
  Timestamp sigma = T_INF;
  OccId parent = NO_OCC;           // creating occurrence; NO_OCC at the root
  EdgeId entry = NO_EDGE;          // edge that created (or re-parented) this occurrence
  uint32_t dist = DIST_INF;        // BFS hop count; DIST_INF for DFS
  OccId prev_same_vertex = NO_OCC; // intrusive per-vertex occurrence list
};

// One record per traversed edge, in traversal order. For DFS the label is
// final the moment the edge is walked; BFS labels are resolved against the
// final parent links (an in-place update can displace an earlier entry edge).
struct TraversalLogEntry {
  EdgeId edge = NO_EDGE;
  EdgeLabel label = EdgeLabel::NonTraversed;
  OccId from_occ = NO_OCC;
  OccId ancestor_occ = NO_OCC;  // Backward only: the on-stack occurrence of dst
};

struct TraversalCounters {
  uint64_t edges_traversed = 0;
  uint64_t edges_scanned = 0;  // row/pair window entries consumed; <= m per run
  uint64_t search_probes = 0;  // binary-search probes locating window bounds
  uint64_t pair_probes = 0;    // DFS_V1 neighbor-group inspections
};

struct TraversalTree {
  TraversalKind kind = TraversalKind::DFS_V1;
  VertexId source = NO_VERTEX;
  Timestamp t_s = 0;
  std::vector<Occurrence> occ;      // creation order; occ[0] is the root
  std::vector<OccId> first_occ;     // per vertex; NO_OCC if unreached
  std::vector<OccId> last_occ;      // per vertex; NO_OCC if unreached
  std::vector<TraversalLogEntry> log;
  TraversalCounters counters;

  size_t tree_edges() const { return occ.empty() ? 0 : occ.size() - 1; }
  bool reached(VertexId v) const { return first_occ[v] != NO_OCC; }
  // occurrence ids of v in creation order
  std::vector<OccId> occurrences_of(VertexId v) const;
};

// label per edge id (size m)
using EdgeClassification = std::vector<EdgeLabel>;

enum class LabelScheme : uint8_t { Auto, FiveWay, ThreeWay };

struct TraversalResult {
  TraversalTree tree;
  EdgeClassification labels;
};

TraversalResult dfs_v1(const TemporalGraph& g, VertexId source, Timestamp t_s);
TraversalResult dfs_v2(const TemporalGraph& g, VertexId source, Timestamp t_s);
TraversalResult bfs(const TemporalGraph& g, VertexId source, Timestamp t_s);

TraversalTree traverse(const TemporalGraph& g, TraversalKind kind, VertexId source,
                       Timestamp t_s);

// Same visit order and tree wiring as traverse(), but records no edge log and
// makes no label decisions. The cheap variant for path queries, where only
// occurrence parents and sigmas matter.
TraversalTree traverse_tree(const TemporalGraph& g, TraversalKind kind, VertexId source,
                            Timestamp t_s);

// Recovers the full per-edge labeling from a tree's log. Requesting the
// five-way DFS scheme for a BFS tree is a contract violation.
EdgeClassification classify_edges(const TraversalTree& tree, const TemporalGraph& g,
                                  LabelScheme scheme = LabelScheme::Auto);

// One temporal cycle per Backward edge: the tree path from the on-stack
// ancestor down to the traversing occurrence, closed by the backward edge.
// Edge timestamps are non-decreasing along each cycle. DFS trees only.
std::vector<std::vector<EdgeId>> extract_cycles(const TraversalTree& tree,
                                                const TemporalGraph& g);

// Sorted distinct vertices appearing in the tree.
std::vector<VertexId> reachable_set(const TraversalTree& tree);

// Plain BFS over the static projection.
std::vector<VertexId> static_reachable_set(const StaticGraph& s, VertexId source);

}  // namespace tgt
