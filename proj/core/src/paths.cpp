#include "tgt/paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tgt {

PathAnswer tree_path(const TraversalTree& tree, OccId target, const TemporalGraph& g) {
  if (target >= tree.occ.size()) throw std::out_of_range("tree_path: bad occurrence id");
  PathAnswer p;
  for (OccId cur = target; tree.occ[cur].entry != NO_EDGE; cur = tree.occ[cur].parent)
    p.edges.push_back(tree.occ[cur].entry);
  std::reverse(p.edges.begin(), p.edges.end());
  if (p.edges.empty()) {
    p.t_start = p.t_end = tree.t_s;
  } else {
    p.t_start = g.edge_t(p.edges.front());
    p.t_end = g.edge_t(p.edges.back());
  }
  return p;
}

std::optional<std::string> check_path(const TemporalGraph& g, const PathAnswer& p,
                                      VertexId source, VertexId target, Timestamp min_start) {
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "path " << g.label(source) << "->" << g.label(target) << ": " << why;
    return os.str();
  };
  if (p.edges.empty()) {
    if (source != target) return fail("empty but endpoints differ");
    return std::nullopt;
  }
  if (g.edge_src(p.edges.front()) != source) return fail("does not start at source");
  if (g.edge_dst(p.edges.back()) != target) return fail("does not end at target");
  if (g.edge_t(p.edges.front()) < min_start) return fail("departs before allowed start");
  if (g.edge_t(p.edges.front()) != p.t_start || g.edge_t(p.edges.back()) != p.t_end)
    return fail("t_start/t_end do not match edge timestamps");
  for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.edge_dst(p.edges[i]) != g.edge_src(p.edges[i + 1])) return fail("edges do not chain");
    if (g.edge_t(p.edges[i]) > g.edge_t(p.edges[i + 1])) return fail("timestamps decrease");
  }
  return std::nullopt;
}

ForemostPaths foremost_paths(const TemporalGraph& g, VertexId source, Timestamp t_s,
                             PathEngine engine) {
  ForemostPaths r;
  r.tree = traverse_tree(
      g, engine == PathEngine::DFS_V1 ? TraversalKind::DFS_V1 : TraversalKind::BFS, source, t_s);
  // Per-vertex arrival times strictly improve across occurrences, so the
  // newest occurrence is the earliest-arrival one.
  r.best = r.tree.last_occ;
  return r;
}

OccurrenceIndex build_occurrence_index(const TraversalTree& tree) {
  if (tree.kind != TraversalKind::DFS_V2)
    throw std::logic_error("build_occurrence_index: needs a reverse-chronological DFS tree");
  const size_t n = tree.first_occ.size();
  const OccId N = static_cast<OccId>(tree.occ.size());

  // Departure time of each occurrence's root path. A visit occurrence's sigma
  // is exactly its entry edge's timestamp, so no graph lookup is needed.
  std::vector<Timestamp> t_start(N, 0);
  for (OccId o = 1; o < N; ++o) {
    const Occurrence& oc = tree.occ[o];
    t_start[o] = oc.parent == 0 ? oc.sigma : t_start[oc.parent];
  }

  OccurrenceIndex idx;
  idx.source = tree.source;
  idx.t_s = tree.t_s;
  idx.n = n;
  idx.offsets.assign(n + 1, 0);
  for (OccId o = 1; o < N; ++o) idx.offsets[tree.occ[o].vertex + 1]++;
  for (size_t v = 0; v < n; ++v) idx.offsets[v + 1] += idx.offsets[v];

  idx.entries.resize(N ? N - 1 : 0);
  std::vector<uint32_t> cur(idx.offsets.begin(), idx.offsets.end() - 1);
  for (OccId o = 1; o < N; ++o) {
    const Occurrence& oc = tree.occ[o];
    idx.entries[cur[oc.vertex]++] = {t_start[o], oc.sigma, o};
  }

  // Within a row (creation order) t_end strictly decreases and t_start never
  // increases; collapse equal-t_start runs onto their last entry so both
  // columns become strictly decreasing.
  std::vector<OccurrenceIndex::Entry> packed;
  packed.reserve(idx.entries.size());
  std::vector<uint32_t> new_off(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    new_off[v] = static_cast<uint32_t>(packed.size());
    auto [lo, hi] = idx.row(v);
    for (uint32_t i = lo; i < hi; ++i) {
      if (i + 1 < hi && idx.entries[i + 1].t_start == idx.entries[i].t_start) continue;
      packed.push_back(idx.entries[i]);
    }
  }
  new_off[n] = static_cast<uint32_t>(packed.size());
  idx.entries = std::move(packed);
  idx.offsets = std::move(new_off);
  return idx;
}

std::vector<std::string> validate_occurrence_index(const OccurrenceIndex& idx) {
  std::vector<std::string> problems;
  for (VertexId v = 0; v < idx.n; ++v) {
    auto [lo, hi] = idx.row(v);
    for (uint32_t i = lo; i + 1 < hi; ++i) {
      if (idx.entries[i + 1].t_start >= idx.entries[i].t_start)
        problems.push_back("vertex " + std::to_string(v) + ": t_start not strictly decreasing");
      if (idx.entries[i + 1].t_end >= idx.entries[i].t_end)
        problems.push_back("vertex " + std::to_string(v) + ": t_end not strictly decreasing");
    }
    for (uint32_t i = lo; i < hi; ++i)
      if (idx.entries[i].t_start > idx.entries[i].t_end)
        problems.push_back("vertex " + std::to_string(v) + ": interval inverted");
  }
  return problems;
}

FastestPaths fastest_paths(const OccurrenceIndex& idx, Timestamp t_x, Timestamp t_y) {
  if (t_x > t_y) throw std::invalid_argument("fastest_paths: t_x > t_y");
  if (t_x < idx.t_s) throw std::invalid_argument("fastest_paths: t_x precedes the tree's start");
  FastestPaths r;
  r.best.assign(idx.n, NO_OCC);
  r.duration.assign(idx.n, T_INF);
  for (VertexId v = 0; v < idx.n; ++v) {
    auto [lo, hi] = idx.row(v);
    // Prefix with t_start >= t_x (column strictly decreasing).
    auto first_below = std::partition_point(
        idx.entries.begin() + lo, idx.entries.begin() + hi,
        [&](const OccurrenceIndex::Entry& e) { return e.t_start >= t_x; });
    for (auto it = idx.entries.begin() + lo; it != first_below; ++it) {
      if (it->t_end > t_y) continue;
      Timestamp d = it->t_end - it->t_start;
      if (d < r.duration[v]) {
        r.duration[v] = d;
        r.best[v] = it->occ;
      }
    }
  }
  r.best[idx.source] = 0;
  r.duration[idx.source] = 0;
  return r;
}

ForemostFrom foremost_from(const OccurrenceIndex& idx, Timestamp t) {
  if (t < idx.t_s) throw std::invalid_argument("foremost_from: t precedes the tree's start");
  ForemostFrom r;
  r.best.assign(idx.n, NO_OCC);
  r.arrival.assign(idx.n, T_INF);
  for (VertexId v = 0; v < idx.n; ++v) {
    auto [lo, hi] = idx.row(v);
    auto first_below = std::partition_point(
        idx.entries.begin() + lo, idx.entries.begin() + hi,
        [&](const OccurrenceIndex::Entry& e) { return e.t_start >= t; });
    if (first_below == idx.entries.begin() + lo) continue;  // nothing departs at/after t
    // Within the qualifying prefix t_end strictly decreases: the last entry
    // arrives earliest.
    const auto& e = *(first_below - 1);
    r.best[v] = e.occ;
    r.arrival[v] = e.t_end;
  }
  r.best[idx.source] = 0;
  r.arrival[idx.source] = t;
  return r;
}

ShortestPaths shortest_paths(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  ShortestPaths r;
  r.tree = traverse_tree(g, TraversalKind::BFS, source, t_s);
  r.best = r.tree.first_occ;  // first occurrence = fewest hops
  return r;
}

}  // namespace tgt
