#include "tgt/traversal.hpp"

#include <algorithm>
#include <cassert>

namespace tgt {

const char* edge_label_name(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::NonTraversed: return "non_traversed";
    case EdgeLabel::Tree: return "tree";
    case EdgeLabel::Forward: return "forward";
    case EdgeLabel::Backward: return "backward";
    case EdgeLabel::Cross: return "cross";
    case EdgeLabel::NonTree: return "non_tree";
  }
  return "?";
}

std::vector<OccId> TraversalTree::occurrences_of(VertexId v) const {
  std::vector<OccId> ids;
  for (OccId o = last_occ[v]; o != NO_OCC; o = occ[o].prev_same_vertex) ids.push_back(o);
  std::reverse(ids.begin(), ids.end());
  return ids;
}

namespace {

struct VisitState {
  std::vector<Timestamp> sigma_min;  // per vertex, current minimum sigma (T_INF if unvisited)
  std::vector<OccId> first_occ, last_occ;

  explicit VisitState(size_t n)
      : sigma_min(n, T_INF), first_occ(n, NO_OCC), last_occ(n, NO_OCC) {}

  OccId visit(TraversalTree& tree, VertexId v, Timestamp sigma, OccId parent, EdgeId entry,
              uint32_t dist) {
    OccId id = static_cast<OccId>(tree.occ.size());
    tree.occ.push_back({v, sigma, parent, entry, dist, last_occ[v]});
    sigma_min[v] = sigma;
    if (first_occ[v] == NO_OCC) first_occ[v] = id;
    last_occ[v] = id;
    return id;
  }
};

// Ancestor bookkeeping for the DFS label decisions, valid at traversal time:
// an occurrence of v sits on the active stack  -> the edge closes a cycle
// (Backward); otherwise, if v's newest occurrence was created after the
// traversing occurrence was pushed, it lies inside that subtree (Forward);
// otherwise the two stand in no ancestor relation (Cross).
struct DfsLabeler {
  std::vector<OccId> on_stack;
  explicit DfsLabeler(size_t n) : on_stack(n, NO_OCC) {}

  void push(VertexId v, OccId o) {
    if (on_stack[v] != NO_OCC)
      throw std::logic_error("two occurrences of one vertex on the DFS stack");
    on_stack[v] = o;
  }
  void pop(VertexId v) { on_stack[v] = NO_OCC; }

  TraversalLogEntry classify(const VisitState& vs, EdgeId e, VertexId dst, OccId from) const {
    if (on_stack[dst] != NO_OCC) return {e, EdgeLabel::Backward, from, on_stack[dst]};
    if (vs.last_occ[dst] != NO_OCC && vs.last_occ[dst] > from)
      return {e, EdgeLabel::Forward, from, NO_OCC};
    return {e, EdgeLabel::Cross, from, NO_OCC};
  }
};

TraversalTree init_tree(const TemporalGraph& g, TraversalKind kind, VertexId source,
                        Timestamp t_s) {
  if (source >= g.num_vertices()) throw DomainError("source vertex out of range");
  TraversalTree tree;
  tree.kind = kind;
  tree.source = source;
  tree.t_s = t_s;
  return tree;
}

void finish_tree(TraversalTree& tree, VisitState& vs) {
  tree.first_occ = std::move(vs.first_occ);
  tree.last_occ = std::move(vs.last_occ);
}

// Each engine comes in two flavors: the full one records the per-edge log and
// labels as it goes; the lean one (WithLog = false) produces only the tree
// wiring for the path-query pipelines and skips every label decision.
template <bool WithLog>
TraversalTree run_dfs_v1(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  TraversalTree tree = init_tree(g, TraversalKind::DFS_V1, source, t_s);
  VisitState vs(g.num_vertices());
  DfsLabeler lab(WithLog ? g.num_vertices() : 0);
  TraversalCounters& ctr = tree.counters;

  // Per-pair cursor floor: positions of this pair already consumed by earlier
  // (larger-sigma) occurrences of the tail form a suffix of the run; an
  // occurrence opens the still-untraversed window [lb(sigma), floor) once.
  std::vector<uint32_t> pair_floor(g.num_pairs());
  for (uint32_t p = 0; p < g.num_pairs(); ++p) pair_floor[p] = g.pair_hi(p);

  struct Frame {
    OccId occ;
    uint32_t pair_cur, pair_end;
    uint32_t pos, win_hi;  // open window in grouped positions
  };
  std::vector<Frame> stack;

  auto open_window = [&](Frame& f, bool advance) -> bool {
    if (advance) f.pair_cur++;
    Timestamp sig = tree.occ[f.occ].sigma;
    while (f.pair_cur < f.pair_end) {
      ctr.pair_probes++;
      uint32_t p = f.pair_cur;
      uint32_t lo = g.pair_lo(p), hi = pair_floor[p];
      while (lo < hi) {
        ctr.search_probes++;
        uint32_t mid = lo + (hi - lo) / 2;
        if (g.edge_t(g.grouped(mid)) < sig)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (lo < pair_floor[p]) {
        f.pos = lo;
        f.win_hi = pair_floor[p];
        pair_floor[p] = lo;
        return true;
      }
      f.pair_cur++;
    }
    return false;
  };

  auto enter = [&](VertexId v, OccId o) {
    if constexpr (WithLog) lab.push(v, o);
    auto [plo, phi] = g.pair_range(v);
    Frame f{o, plo, phi, 0, 0};
    if (open_window(f, false)) {
      stack.push_back(f);
    } else {
      if constexpr (WithLog) lab.pop(v);
    }
  };

  enter(source, vs.visit(tree, source, t_s, NO_OCC, NO_EDGE, DIST_INF));

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pos == f.win_hi && !open_window(f, true)) {
      if constexpr (WithLog) lab.pop(tree.occ[f.occ].vertex);
      stack.pop_back();
      continue;
    }
    EdgeId e = g.grouped(f.pos++);
    ctr.edges_scanned++;
    ctr.edges_traversed++;
    VertexId v = g.edge_dst(e);
    Timestamp t = g.edge_t(e);
    OccId from = f.occ;
    if (vs.sigma_min[v] > t) {
      if constexpr (WithLog) tree.log.push_back({e, EdgeLabel::Tree, from, NO_OCC});
      enter(v, vs.visit(tree, v, t, from, e, DIST_INF));
    } else if constexpr (WithLog) {
      tree.log.push_back(lab.classify(vs, e, v, from));
    }
  }

  finish_tree(tree, vs);
  return tree;
}

template <bool WithLog>
TraversalTree run_dfs_v2(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  TraversalTree tree = init_tree(g, TraversalKind::DFS_V2, source, t_s);
  VisitState vs(g.num_vertices());
  DfsLabeler lab(WithLog ? g.num_vertices() : 0);
  TraversalCounters& ctr = tree.counters;

  // Reverse-chronological cursor: each occurrence consumes the window
  // [lb(sigma), floor) of its row, scanning from the latest edge downward.
  std::vector<EdgeId> floor_(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) floor_[v] = g.row(v).second;

  struct Frame {
    OccId occ;
    EdgeId pos, win_lo;  // next consume at pos-1; window [win_lo, initial floor)
  };
  std::vector<Frame> stack;

  auto enter = [&](VertexId v, OccId o, Timestamp sig) {
    EdgeId lo = g.row(v).first, hi = floor_[v];
    while (lo < hi) {
      ctr.search_probes++;
      EdgeId mid = lo + (hi - lo) / 2;
      if (g.edge_t(mid) < sig)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < floor_[v]) {
      if constexpr (WithLog) lab.push(v, o);
      stack.push_back({o, floor_[v], lo});
      floor_[v] = lo;
    }
  };

  enter(source, vs.visit(tree, source, t_s, NO_OCC, NO_EDGE, DIST_INF), t_s);

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pos == f.win_lo) {
      if constexpr (WithLog) lab.pop(tree.occ[f.occ].vertex);
      stack.pop_back();
      continue;
    }
    EdgeId e = --f.pos;
    ctr.edges_scanned++;
    ctr.edges_traversed++;
    VertexId v = g.edge_dst(e);
    Timestamp t = g.edge_t(e);
    OccId from = f.occ;
    if (vs.sigma_min[v] > t) {
      if constexpr (WithLog) tree.log.push_back({e, EdgeLabel::Tree, from, NO_OCC});
      enter(v, vs.visit(tree, v, t, from, e, DIST_INF), t);
    } else if constexpr (WithLog) {
      tree.log.push_back(lab.classify(vs, e, v, from));
    }
  }

  finish_tree(tree, vs);
  return tree;
}

template <bool WithLog>
TraversalTree run_bfs(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  TraversalTree tree = init_tree(g, TraversalKind::BFS, source, t_s);
  VisitState vs(g.num_vertices());
  TraversalCounters& ctr = tree.counters;

  std::vector<EdgeId> floor_(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) floor_[v] = g.row(v).second;

  // The occurrence array doubles as the FIFO queue; records at or past `head`
  // are pending. A vertex's newest record is "in the queue" iff it has not
  // been popped yet.
  vs.visit(tree, source, t_s, NO_OCC, NO_EDGE, 0);
  OccId head = 0;

  while (head < tree.occ.size()) {
    OccId u_occ = head++;
    VertexId u = tree.occ[u_occ].vertex;
    Timestamp sig = tree.occ[u_occ].sigma;  // includes in-place updates
    uint32_t du = tree.occ[u_occ].dist;

    EdgeId lo = g.row(u).first, hi = floor_[u];
    while (lo < hi) {
      ctr.search_probes++;
      EdgeId mid = lo + (hi - lo) / 2;
      if (g.edge_t(mid) < sig)
        lo = mid + 1;
      else
        hi = mid;
    }
    EdgeId win_hi = floor_[u];
    floor_[u] = lo;

    for (EdgeId e = lo; e < win_hi; ++e) {
      ctr.edges_scanned++;
      ctr.edges_traversed++;
      VertexId v = g.edge_dst(e);
      Timestamp t = g.edge_t(e);
      OccId newest = vs.last_occ[v];
      bool live = newest != NO_OCC && newest >= head;
      if constexpr (WithLog)  // provisional; rewritten against final entries below
        tree.log.push_back({e, EdgeLabel::NonTree, u_occ, NO_OCC});
      if (!live) {
        if (vs.sigma_min[v] > t) vs.visit(tree, v, t, u_occ, e, du + 1);
        continue;
      }
      uint32_t dv = tree.occ[newest].dist;
      if (dv == du + 1) {
        if (vs.sigma_min[v] > t) {
          // re-parent the pending record in place: arrival improves, depth kept
          tree.occ[newest].sigma = t;
          tree.occ[newest].parent = u_occ;
          tree.occ[newest].entry = e;
          vs.sigma_min[v] = t;
        }
      } else if (dv == du) {
        if (vs.sigma_min[v] > t) vs.visit(tree, v, t, u_occ, e, du + 1);
      } else {
        // A pending record may only sit on the popped level or one below it.
        throw std::logic_error("BFS queue invariant violated: pending record of '" +
                               g.label(v) + "' at depth " + std::to_string(dv) +
                               " while popping depth " + std::to_string(du));
      }
    }
  }

  // In-place updates can displace an earlier entry edge; resolve labels
  // against the final parent links.
  if constexpr (WithLog) {
    std::vector<bool> is_entry(g.num_edges(), false);
    for (size_t i = 1; i < tree.occ.size(); ++i) is_entry[tree.occ[i].entry] = true;
    for (auto& le : tree.log)
      le.label = is_entry[le.edge] ? EdgeLabel::Tree : EdgeLabel::NonTree;
  }

  finish_tree(tree, vs);
  return tree;
}

}  // namespace

TraversalTree traverse(const TemporalGraph& g, TraversalKind kind, VertexId source,
                       Timestamp t_s) {
  switch (kind) {
    case TraversalKind::DFS_V1: return run_dfs_v1<true>(g, source, t_s);
    case TraversalKind::DFS_V2: return run_dfs_v2<true>(g, source, t_s);
    case TraversalKind::BFS: return run_bfs<true>(g, source, t_s);
  }
  throw std::logic_error("unknown traversal kind");
}

TraversalTree traverse_tree(const TemporalGraph& g, TraversalKind kind, VertexId source,
                            Timestamp t_s) {
  switch (kind) {
    case TraversalKind::DFS_V1: return run_dfs_v1<false>(g, source, t_s);
    case TraversalKind::DFS_V2: return run_dfs_v2<false>(g, source, t_s);
    case TraversalKind::BFS: return run_bfs<false>(g, source, t_s);
  }
  throw std::logic_error("unknown traversal kind");
}

TraversalResult dfs_v1(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  TraversalResult r{run_dfs_v1<true>(g, source, t_s), {}};
  r.labels = classify_edges(r.tree, g);
  return r;
}

TraversalResult dfs_v2(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  TraversalResult r{run_dfs_v2<true>(g, source, t_s), {}};
  r.labels = classify_edges(r.tree, g);
  return r;
}

TraversalResult bfs(const TemporalGraph& g, VertexId source, Timestamp t_s) {
  TraversalResult r{run_bfs<true>(g, source, t_s), {}};
  r.labels = classify_edges(r.tree, g);
  return r;
}

EdgeClassification classify_edges(const TraversalTree& tree, const TemporalGraph& g,
                                  LabelScheme scheme) {
  if (scheme == LabelScheme::FiveWay && tree.kind == TraversalKind::BFS)
    throw std::logic_error("five-way labels requested for a BFS tree");
  if (scheme == LabelScheme::ThreeWay && tree.kind != TraversalKind::BFS)
    throw std::logic_error("three-way labels requested for a DFS tree");
  EdgeClassification labels(g.num_edges(), EdgeLabel::NonTraversed);
  for (const auto& le : tree.log) labels[le.edge] = le.label;
  return labels;
}

std::vector<std::vector<EdgeId>> extract_cycles(const TraversalTree& tree,
                                                const TemporalGraph& g) {
  if (tree.kind == TraversalKind::BFS)
    throw std::logic_error("cycle extraction requires a DFS tree");
  std::vector<std::vector<EdgeId>> cycles;
  for (const auto& le : tree.log) {
    if (le.label != EdgeLabel::Backward) continue;
    std::vector<EdgeId> cyc;
    for (OccId cur = le.from_occ; cur != le.ancestor_occ; cur = tree.occ[cur].parent)
      cyc.push_back(tree.occ[cur].entry);
    std::reverse(cyc.begin(), cyc.end());
    cyc.push_back(le.edge);
#ifndef NDEBUG
    for (size_t i = 1; i < cyc.size(); ++i)
      assert(g.edge_t(cyc[i - 1]) <= g.edge_t(cyc[i]));
#endif
    (void)g;
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::vector<VertexId> reachable_set(const TraversalTree& tree) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < tree.first_occ.size(); ++v)
    if (tree.first_occ[v] != NO_OCC) out.push_back(v);
  return out;
}

std::vector<VertexId> static_reachable_set(const StaticGraph& s, VertexId source) {
  if (source >= s.num_vertices()) throw DomainError("source vertex out of range");
  std::vector<bool> seen(s.num_vertices(), false);
  std::vector<VertexId> queue{source};
  seen[source] = true;
  for (size_t i = 0; i < queue.size(); ++i) {
    VertexId u = queue[i];
    for (uint32_t k = s.offsets[u]; k < s.offsets[u + 1]; ++k) {
      VertexId v = s.nbr[k];
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace tgt
