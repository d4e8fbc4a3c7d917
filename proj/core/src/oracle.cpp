#include "tgt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace tgt {

namespace {

void guard_size(const TemporalGraph& g) {
  if (g.num_edges() > SIM_MAX_EDGES)
    throw GuardError("reference implementation refuses graphs over " +
                     std::to_string(SIM_MAX_EDGES) + " edges");
  if (distinct_timestamps(g).size() > SIM_MAX_SNAPSHOTS)
    throw GuardError("reference implementation refuses graphs over " +
                     std::to_string(SIM_MAX_SNAPSHOTS) + " distinct timestamps");
}

struct Sim {
  const TemporalGraph& g;
  TraversalTree tree;
  std::vector<Timestamp> sigma_min;
  std::vector<OccId> first_occ, last_occ;
  std::vector<uint8_t> traversed;

  Sim(const TemporalGraph& gr, TraversalKind kind, VertexId source, Timestamp t_s)
      : g(gr),
        sigma_min(gr.num_vertices(), T_INF),
        first_occ(gr.num_vertices(), NO_OCC),
        last_occ(gr.num_vertices(), NO_OCC),
        traversed(gr.num_edges(), 0) {
    if (source >= gr.num_vertices()) throw DomainError("source vertex out of range");
    tree.kind = kind;
    tree.source = source;
    tree.t_s = t_s;
  }

  OccId visit(VertexId v, Timestamp sigma, OccId parent, EdgeId entry, uint32_t dist) {
    OccId id = static_cast<OccId>(tree.occ.size());
    tree.occ.push_back({v, sigma, parent, entry, dist, last_occ[v]});
    sigma_min[v] = sigma;
    if (first_occ[v] == NO_OCC) first_occ[v] = id;
    last_occ[v] = id;
    return id;
  }

  bool feasible(EdgeId e, Timestamp sig) const { return !traversed[e] && g.edge_t(e) >= sig; }

  TraversalTree finish() {
    tree.first_occ = std::move(first_occ);
    tree.last_occ = std::move(last_occ);
    tree.counters.edges_traversed = tree.counters.edges_scanned = tree.log.size();
    return std::move(tree);
  }
};

TraversalTree simulate_dfs(const TemporalGraph& g, TraversalKind kind, VertexId source,
                           Timestamp t_s, const SimulateOptions& opts) {
  Sim sim(g, kind, source, t_s);
  std::vector<OccId> stack;

  // Rescan the full out-row every step: rows are stored t-ascending (ties by
  // destination id), so "first feasible untraversed of the smallest
  // destination" and "last feasible untraversed" fall out of one pass.
  auto pick = [&](VertexId u, Timestamp sig) -> EdgeId {
    auto [lo, hi] = g.row(u);
    EdgeId best = NO_EDGE;
    for (EdgeId e = lo; e < hi; ++e) {
      if (!sim.feasible(e, sig)) continue;
      if (kind == TraversalKind::DFS_V2) {
        best = e;  // keep the latest
      } else if (best == NO_EDGE || g.edge_dst(e) < g.edge_dst(best) ||
                 (g.edge_dst(e) == g.edge_dst(best) && opts.v1_pick_latest)) {
        best = e;
      }
    }
    return best;
  };

  auto stacked_occurrence = [&](VertexId v) -> OccId {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it)
      if (sim.tree.occ[*it].vertex == v) return *it;
    return NO_OCC;
  };

  auto in_subtree = [&](OccId anchor, VertexId v) {
    for (OccId o = 0; o < sim.tree.occ.size(); ++o) {
      if (sim.tree.occ[o].vertex != v) continue;
      for (OccId c = o; c != NO_OCC; c = sim.tree.occ[c].parent)
        if (c == anchor) return true;
    }
    return false;
  };

  stack.push_back(sim.visit(source, t_s, NO_OCC, NO_EDGE, DIST_INF));
  while (!stack.empty()) {
    OccId top = stack.back();
    EdgeId e = pick(sim.tree.occ[top].vertex, sim.tree.occ[top].sigma);
    if (e == NO_EDGE) {
      stack.pop_back();
      continue;
    }
    sim.traversed[e] = true;
    VertexId v = g.edge_dst(e);
    Timestamp t = g.edge_t(e);
    if (sim.sigma_min[v] > t) {
      sim.tree.log.push_back({e, EdgeLabel::Tree, top, NO_OCC});
      stack.push_back(sim.visit(v, t, top, e, DIST_INF));
    } else if (OccId anc = stacked_occurrence(v); anc != NO_OCC) {
      sim.tree.log.push_back({e, EdgeLabel::Backward, top, anc});
    } else if (in_subtree(top, v)) {
      sim.tree.log.push_back({e, EdgeLabel::Forward, top, NO_OCC});
    } else {
      sim.tree.log.push_back({e, EdgeLabel::Cross, top, NO_OCC});
    }
  }
  return sim.finish();
}

TraversalTree simulate_bfs(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  Sim sim(g, TraversalKind::BFS, source, t_s);
  sim.visit(source, t_s, NO_OCC, NO_EDGE, 0);
  OccId head = 0;

  while (head < sim.tree.occ.size()) {
    OccId uo = head++;
    VertexId u = sim.tree.occ[uo].vertex;
    Timestamp sig = sim.tree.occ[uo].sigma;
    uint32_t du = sim.tree.occ[uo].dist;

    for (;;) {
      EdgeId e = NO_EDGE;
      auto [lo, hi] = g.row(u);
      for (EdgeId k = lo; k < hi; ++k)
        if (sim.feasible(k, sig)) {
          e = k;
          break;
        }
      if (e == NO_EDGE) break;
      sim.traversed[e] = true;
      VertexId v = g.edge_dst(e);
      Timestamp t = g.edge_t(e);

      OccId newest = NO_OCC;
      for (OccId o = head; o < sim.tree.occ.size(); ++o)
        if (sim.tree.occ[o].vertex == v) newest = o;

      if (newest == NO_OCC) {
        if (sim.sigma_min[v] > t) {
          sim.tree.log.push_back({e, EdgeLabel::Tree, uo, NO_OCC});
          sim.visit(v, t, uo, e, du + 1);
        } else {
          sim.tree.log.push_back({e, EdgeLabel::NonTree, uo, NO_OCC});
        }
        continue;
      }
      uint32_t dv = sim.tree.occ[newest].dist;
      if (dv == du + 1) {
        if (sim.sigma_min[v] > t) {
          sim.tree.log.push_back({e, EdgeLabel::Tree, uo, NO_OCC});
          sim.tree.occ[newest].sigma = t;
          sim.tree.occ[newest].parent = uo;
          sim.tree.occ[newest].entry = e;
          sim.sigma_min[v] = t;
        } else {
          sim.tree.log.push_back({e, EdgeLabel::NonTree, uo, NO_OCC});
        }
      } else if (dv == du) {
        if (sim.sigma_min[v] > t) {
          sim.tree.log.push_back({e, EdgeLabel::Tree, uo, NO_OCC});
          sim.visit(v, t, uo, e, du + 1);
        } else {
          sim.tree.log.push_back({e, EdgeLabel::NonTree, uo, NO_OCC});
        }
      } else {
        throw std::logic_error("BFS queue invariant violated in reference run");
      }
    }
  }

  std::vector<bool> is_entry(g.num_edges(), false);
  for (size_t i = 1; i < sim.tree.occ.size(); ++i) is_entry[sim.tree.occ[i].entry] = true;
  for (auto& le : sim.tree.log)
    le.label = is_entry[le.edge] ? EdgeLabel::Tree : EdgeLabel::NonTree;
  return sim.finish();
}

// Fixpoint of arrival[v] = min t over edges (u,v,t) with t >= arrival[u].
std::vector<Timestamp> relax_arrivals(const TemporalGraph& g, VertexId source, Timestamp t0) {
  std::vector<Timestamp> arr(g.num_vertices(), T_INF);
  arr[source] = t0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      VertexId u = g.edge_src(e), v = g.edge_dst(e);
      Timestamp t = g.edge_t(e);
      if (arr[u] != T_INF && t >= arr[u] && t < arr[v]) {
        arr[v] = t;
        changed = true;
      }
    }
  }
  return arr;
}

template <typename T>
std::vector<std::optional<T>> pack_optional(const std::vector<T>& raw, T absent) {
  std::vector<std::optional<T>> out(raw.size());
  for (size_t i = 0; i < raw.size(); ++i)
    if (raw[i] != absent) out[i] = raw[i];
  return out;
}

std::vector<Timestamp> source_out_times(const TemporalGraph& g, VertexId source, Timestamp t_x) {
  std::vector<Timestamp> starts;
  auto [lo, hi] = g.row(source);
  for (EdgeId e = lo; e < hi; ++e)
    if (g.edge_t(e) >= t_x) starts.push_back(g.edge_t(e));
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());  // row is t-sorted
  return starts;
}

}  // namespace

TraversalTree simulate_definition(const TemporalGraph& g, TraversalKind kind, VertexId source,
                                  Timestamp t_s, const SimulateOptions& opts) {
  if (g.num_edges() > SIM_MAX_EDGES)
    throw GuardError("reference implementation refuses graphs over " +
                     std::to_string(SIM_MAX_EDGES) + " edges");
  if (kind == TraversalKind::BFS) return simulate_bfs(g, source, t_s);
  return simulate_dfs(g, kind, source, t_s, opts);
}

std::optional<std::string> compare_trees(const TraversalTree& a, const TraversalTree& b) {
  std::ostringstream os;
  auto diff = [&](const char* what, auto x, auto y) {
    os << what << ": " << x << " vs " << y;
    return os.str();
  };
  if (a.kind != b.kind) return diff("kind", static_cast<int>(a.kind), static_cast<int>(b.kind));
  if (a.source != b.source) return diff("source", a.source, b.source);
  if (a.t_s != b.t_s) return diff("t_s", a.t_s, b.t_s);
  if (a.occ.size() != b.occ.size()) return diff("occurrence count", a.occ.size(), b.occ.size());
  for (size_t i = 0; i < a.occ.size(); ++i) {
    const Occurrence &x = a.occ[i], &y = b.occ[i];
    os << "occurrence " << i << " ";
    if (x.vertex != y.vertex) return diff("vertex", x.vertex, y.vertex);
    if (x.sigma != y.sigma) return diff("sigma", x.sigma, y.sigma);
    if (x.parent != y.parent) return diff("parent", x.parent, y.parent);
    if (x.entry != y.entry) return diff("entry", x.entry, y.entry);
    if (x.dist != y.dist) return diff("dist", x.dist, y.dist);
    if (x.prev_same_vertex != y.prev_same_vertex)
      return diff("prev_same_vertex", x.prev_same_vertex, y.prev_same_vertex);
    os.str("");
  }
  if (a.log.size() != b.log.size()) return diff("log length", a.log.size(), b.log.size());
  for (size_t i = 0; i < a.log.size(); ++i) {
    const TraversalLogEntry &x = a.log[i], &y = b.log[i];
    os << "log entry " << i << " ";
    if (x.edge != y.edge) return diff("edge", x.edge, y.edge);
    if (x.label != y.label)
      return diff("label", edge_label_name(x.label), edge_label_name(y.label));
    if (x.from_occ != y.from_occ) return diff("from", x.from_occ, y.from_occ);
    if (x.ancestor_occ != y.ancestor_occ) return diff("ancestor", x.ancestor_occ, y.ancestor_occ);
    os.str("");
  }
  if (a.first_occ != b.first_occ) return std::string("first-occurrence tables differ");
  if (a.last_occ != b.last_occ) return std::string("last-occurrence tables differ");
  return std::nullopt;
}

std::vector<std::optional<Timestamp>> exhaustive_foremost(const TemporalGraph& g, VertexId source,
                                                          Timestamp t_s) {
  guard_size(g);
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  return pack_optional(relax_arrivals(g, source, t_s), T_INF);
}

std::vector<std::optional<uint32_t>> exhaustive_foremost_hops(const TemporalGraph& g,
                                                              VertexId source, Timestamp t_s) {
  guard_size(g);
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  std::vector<Timestamp> target = relax_arrivals(g, source, t_s);

  std::vector<Timestamp> best(g.num_vertices(), T_INF), prev;
  best[source] = t_s;
  std::vector<uint32_t> hops(g.num_vertices(), DIST_INF);
  hops[source] = 0;
  for (uint32_t h = 1;; ++h) {
    prev = best;
    bool changed = false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      VertexId u = g.edge_src(e), v = g.edge_dst(e);
      Timestamp t = g.edge_t(e);
      if (prev[u] != T_INF && t >= prev[u] && t < best[v]) {
        best[v] = t;
        changed = true;
      }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (hops[v] == DIST_INF && best[v] != T_INF && best[v] == target[v]) hops[v] = h;
    if (!changed) break;
  }
  return pack_optional(hops, DIST_INF);
}

std::vector<std::optional<Timestamp>> exhaustive_fastest(const TemporalGraph& g, VertexId source,
                                                         Timestamp t_x, Timestamp t_y) {
  guard_size(g);
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  if (t_x > t_y) throw std::invalid_argument("exhaustive_fastest: t_x > t_y");
  std::vector<Timestamp> dur(g.num_vertices(), T_INF);
  dur[source] = 0;
  for (Timestamp t0 : source_out_times(g, source, t_x)) {
    std::vector<Timestamp> arr = relax_arrivals(g, source, t0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == source || arr[v] == T_INF || arr[v] > t_y) continue;
      dur[v] = std::min(dur[v], arr[v] - t0);
    }
  }
  return pack_optional(dur, T_INF);
}

std::vector<std::optional<uint32_t>> exhaustive_shortest(const TemporalGraph& g, VertexId source,
                                                         Timestamp t_s) {
  guard_size(g);
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  std::vector<Timestamp> best(g.num_vertices(), T_INF), prev;
  best[source] = t_s;
  std::vector<uint32_t> hops(g.num_vertices(), DIST_INF);
  hops[source] = 0;
  for (uint32_t h = 1;; ++h) {
    prev = best;
    bool changed = false;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      VertexId u = g.edge_src(e), v = g.edge_dst(e);
      Timestamp t = g.edge_t(e);
      if (prev[u] != T_INF && t >= prev[u] && t < best[v]) {
        best[v] = t;
        changed = true;
      }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (hops[v] == DIST_INF && best[v] != T_INF) hops[v] = h;
    if (!changed) break;
  }
  return pack_optional(hops, DIST_INF);
}

namespace {

// Earliest-arrival by priority queue over (arrival, vertex), one binary
// search per static neighbor: the conventional single-query algorithm.
std::vector<Timestamp> pq_arrivals(const TemporalGraph& g, VertexId source, Timestamp t0) {
  std::vector<Timestamp> arr(g.num_vertices(), T_INF);
  arr[source] = t0;
  using Item = std::pair<Timestamp, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({t0, source});
  while (!pq.empty()) {
    auto [a, u] = pq.top();
    pq.pop();
    if (a != arr[u]) continue;  // stale
    auto [plo, phi] = g.pair_range(u);
    for (uint32_t p = plo; p < phi; ++p) {
      uint32_t lo = g.pair_lo(p), hi = g.pair_hi(p);
      while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (g.edge_t(g.grouped(mid)) < a)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (lo == g.pair_hi(p)) continue;
      Timestamp t = g.edge_t(g.grouped(lo));
      VertexId v = g.pair_dst(p);
      if (t < arr[v]) {
        arr[v] = t;
        pq.push({t, v});
      }
    }
  }
  return arr;
}

}  // namespace

std::vector<std::optional<Timestamp>> baseline_foremost(const TemporalGraph& g, VertexId source,
                                                        Timestamp t_s) {
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  return pack_optional(pq_arrivals(g, source, t_s), T_INF);
}

std::vector<std::optional<Timestamp>> baseline_fastest(const TemporalGraph& g, VertexId source,
                                                       Timestamp t_x, Timestamp t_y) {
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  if (t_x > t_y) throw std::invalid_argument("baseline_fastest: t_x > t_y");
  std::vector<Timestamp> dur(g.num_vertices(), T_INF);
  dur[source] = 0;
  for (Timestamp t0 : source_out_times(g, source, t_x)) {
    std::vector<Timestamp> arr = pq_arrivals(g, source, t0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == source || arr[v] == T_INF || arr[v] > t_y) continue;
      dur[v] = std::min(dur[v], arr[v] - t0);
    }
  }
  return pack_optional(dur, T_INF);
}

std::vector<std::optional<uint32_t>> baseline_shortest(const TemporalGraph& g, VertexId source,
                                                       Timestamp t_s) {
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  std::vector<Timestamp> best(g.num_vertices(), T_INF), prev;
  best[source] = t_s;
  std::vector<uint32_t> hops(g.num_vertices(), DIST_INF);
  hops[source] = 0;
  for (uint32_t h = 1;; ++h) {
    prev = best;
    bool changed = false;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      if (prev[u] == T_INF) continue;
      auto [plo, phi] = g.pair_range(u);
      for (uint32_t p = plo; p < phi; ++p) {
        uint32_t lo = g.pair_lo(p), hi = g.pair_hi(p);
        while (lo < hi) {
          uint32_t mid = lo + (hi - lo) / 2;
          if (g.edge_t(g.grouped(mid)) < prev[u])
            lo = mid + 1;
          else
            hi = mid;
        }
        if (lo == g.pair_hi(p)) continue;
        Timestamp t = g.edge_t(g.grouped(lo));
        VertexId v = g.pair_dst(p);
        if (t < best[v]) {
          best[v] = t;
          changed = true;
        }
      }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      if (hops[v] == DIST_INF && best[v] != T_INF) hops[v] = h;
    if (!changed) break;
  }
  return pack_optional(hops, DIST_INF);
}

}  // namespace tgt
