#pragma once

#include "tgt/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tgt {

// Interns vertex labels in first-appearance order; dense ids 0..n-1.
class LabelTable {
 public:
  VertexId intern(const std::string& label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels_.size());
    labels_.push_back(label);
    index_.emplace(labels_.back(), id);
    return id;
  }
  std::optional<VertexId> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const std::string& label(VertexId v) const { return labels_[v]; }
  size_t size() const { return labels_.size(); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
};

// Immutable temporal graph. Two views over the same edge set:
//  * chronological rows: out-edges of each vertex sorted by (t, dst); this is
//    the order traversal cursors scan, and edge ids index this layout.
//  * neighbor-grouped rows: out-edges sorted by (dst, t), stored as a
//    permutation of edge ids plus one run per distinct (src, dst) pair.
// The pair runs double as the static projection's adjacency.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Takes ownership of the edge list; sorts internally. Edges must be
  // self-loop free and duplicate free ((src, dst, t) triples distinct).
  static TemporalGraph from_edges(std::vector<TemporalEdge> edges, LabelTable labels);

  size_t num_vertices() const { return row_off_.empty() ? 0 : row_off_.size() - 1; }
  size_t num_edges() const { return dst_.size(); }

  // Chronological row of u: edge ids [first, second).
  std::pair<EdgeId, EdgeId> row(VertexId u) const { return {row_off_[u], row_off_[u + 1]}; }
  VertexId edge_src(EdgeId e) const { return src_[e]; }
  VertexId edge_dst(EdgeId e) const { return dst_[e]; }
  Timestamp edge_t(EdgeId e) const { return t_[e]; }
  TemporalEdge edge(EdgeId e) const { return {src_[e], dst_[e], t_[e]}; }

  // Neighbor-grouped view. Pairs of u: indices [first, second) into the pair
  // arrays; pair p covers grouped positions [pair_lo(p), pair_lo(p+1)),
  // t-ascending within the run.
  std::pair<uint32_t, uint32_t> pair_range(VertexId u) const {
    return {pair_off_[u], pair_off_[u + 1]};
  }
  VertexId pair_dst(uint32_t p) const { return pair_dst_[p]; }
  uint32_t pair_lo(uint32_t p) const { return pair_lo_[p]; }
  uint32_t pair_hi(uint32_t p) const { return pair_lo_[p + 1]; }
  EdgeId grouped(uint32_t pos) const { return grouped_[pos]; }
  size_t num_pairs() const { return pair_dst_.size(); }

  uint32_t out_degree(VertexId u) const { return row_off_[u + 1] - row_off_[u]; }
  uint32_t in_degree(VertexId u) const { return in_deg_[u]; }
  uint32_t static_out_degree(VertexId u) const { return pair_off_[u + 1] - pair_off_[u]; }

  const LabelTable& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.label(v); }
  std::optional<VertexId> vertex(const std::string& label) const { return labels_.find(label); }

  // Binary search in the (src, dst) run; NO_EDGE if absent.
  EdgeId find_edge(VertexId src, VertexId dst, Timestamp t) const;

 private:
  LabelTable labels_;
  std::vector<EdgeId> row_off_;     // n+1
  std::vector<VertexId> src_;       // m (redundant with rows; keeps lookups O(1))
  std::vector<VertexId> dst_;       // m
  std::vector<Timestamp> t_;        // m
  std::vector<EdgeId> grouped_;     // m, permutation sorted by (src, dst, t)
  std::vector<uint32_t> pair_off_;  // n+1, vertex -> pair index range
  std::vector<VertexId> pair_dst_;  // P
  std::vector<uint32_t> pair_lo_;   // P+1, pair -> grouped position range
  std::vector<uint32_t> in_deg_;    // n
};

// Distinct (src, dst) pairs of the temporal graph; neighbor lists sorted.
struct StaticGraph {
  std::vector<uint32_t> offsets;  // n+1
  std::vector<VertexId> nbr;
  size_t num_vertices() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  size_t num_edges() const { return nbr.size(); }
};

struct LoadOptions {
  bool directed = true;   // false: each line contributes both directions
  bool koblenz = false;   // last column is the timestamp, optional weight column ignored,
                          // '%' comment lines tolerated
  bool dedupe = false;    // drop repeated (src, dst, t) instead of rejecting
};

struct LoadReport {
  uint64_t lines_total = 0;
  uint64_t self_loops_dropped = 0;
  uint64_t duplicates_dropped = 0;
};

// Format: whitespace-separated "SRC DST T" per line, '#' comment lines and
// blank lines ignored. Timestamps are signed 64-bit integers.
TemporalGraph load_edge_list(std::istream& in, const LoadOptions& opts = {},
                             LoadReport* report = nullptr);
TemporalGraph load_edge_list_file(const std::string& path, const LoadOptions& opts = {},
                                  LoadReport* report = nullptr);

// Plain "SRC DST T" lines in chronological-row order; reloads to an equal graph.
void write_edge_list(const TemporalGraph& g, std::ostream& out);

StaticGraph project_static(const TemporalGraph& g);

// Uniform random temporal graph: m distinct (src, dst, t) triples with
// src != dst and t in [0, t_max]; collisions are redrawn. Deterministic in
// seed. Vertex labels are "0".."n-1".
TemporalGraph generate_random(uint32_t n, uint64_t m, Timestamp t_max, uint64_t seed);

struct GraphStats {
  uint64_t n = 0;
  uint64_t m = 0;
  uint64_t static_edges = 0;
  double d_avg_temporal = 0;  // m / n (mean temporal out-degree)
  uint64_t d_max_temporal = 0;
  double d_avg_static = 0;
  uint64_t d_max_static = 0;
  double d_avg_pair = 0;  // m / static_edges (mean edges per connected pair)
  uint64_t d_max_pair = 0;
  uint64_t snapshots = 0;  // distinct timestamps
};

GraphStats compute_stats(const TemporalGraph& g);

std::vector<Timestamp> distinct_timestamps(const TemporalGraph& g);

// Start time for fraction f of the sorted distinct timestamps: the
// ceil(f * |ss|)-th one (1-indexed, clamped into range), so f=0 keeps every
// edge eligible and f close to 1 leaves only the latest snapshot.
Timestamp pick_ts_fraction(const std::vector<Timestamp>& distinct_ts, double f);

// Structural self-checks (sortedness, offset consistency, degree tallies,
// distinctness, no self-loops). Returns human-readable problems, empty if ok.
std::vector<std::string> validate_graph(const TemporalGraph& g);

}  // namespace tgt
