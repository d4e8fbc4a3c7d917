#include "tgt/verify.hpp"

#include "tgt/oracle.hpp"
#include "tgt/paths.hpp"
#include "tgt/traversal.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace tgt {

namespace {

struct CaseFail {
  std::string check;
  std::string detail;
};

using MaybeFail = std::optional<CaseFail>;

std::string edge_str(const TemporalGraph& g, EdgeId e) {
  std::ostringstream os;
  os << "(" << g.label(g.edge_src(e)) << "," << g.label(g.edge_dst(e)) << "," << g.edge_t(e)
     << ")";
  return os.str();
}

MaybeFail tree_invariants(const TemporalGraph& g, const TraversalResult& res,
                          const char* kind_name, Timestamp t_s) {
  const TraversalTree& tree = res.tree;
  auto fail = [&](const std::string& check, const std::string& detail) {
    return CaseFail{check, std::string(kind_name) + ": " + detail};
  };

  // Every logged edge is distinct and was feasible from its origin.
  std::vector<bool> seen(g.num_edges(), false);
  for (const auto& le : tree.log) {
    if (seen[le.edge]) return fail("edge_traversed_once", "edge " + edge_str(g, le.edge) + " logged twice");
    seen[le.edge] = true;
    if (g.edge_t(le.edge) < t_s)
      return fail("edge_traversed_once", "edge " + edge_str(g, le.edge) + " precedes t_s");
    if (g.edge_t(le.edge) < tree.occ[le.from_occ].sigma)
      return fail("edge_traversed_once",
                  "edge " + edge_str(g, le.edge) + " infeasible from its origin occurrence");
    if (g.edge_src(le.edge) != tree.occ[le.from_occ].vertex)
      return fail("edge_traversed_once", "edge " + edge_str(g, le.edge) + " from wrong vertex");
  }
  if (tree.counters.edges_traversed != tree.log.size())
    return fail("scan_budget", "edges_traversed counter disagrees with log");
  if (tree.counters.edges_scanned > g.num_edges())
    return fail("scan_budget", "edges_scanned " + std::to_string(tree.counters.edges_scanned) +
                                   " exceeds m=" + std::to_string(g.num_edges()));

  size_t feasible_edges = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.edge_t(e) >= t_s) feasible_edges++;
  if (tree.occ.size() - 1 > tree.log.size() || tree.log.size() > feasible_edges)
    return fail("tree_size_bound", "sizes: occ=" + std::to_string(tree.occ.size()) +
                                       " log=" + std::to_string(tree.log.size()) +
                                       " feasible=" + std::to_string(feasible_edges));

  // Occurrence wiring and arrival ordering.
  for (OccId o = 0; o < tree.occ.size(); ++o) {
    const Occurrence& oc = tree.occ[o];
    if (o == 0) {
      if (oc.vertex != tree.source || oc.sigma != tree.t_s || oc.parent != NO_OCC ||
          oc.entry != NO_EDGE)
        return fail("sigma_rules", "malformed root occurrence");
      continue;
    }
    if (oc.parent == NO_OCC || oc.parent >= o || oc.entry == NO_EDGE)
      return fail("sigma_rules", "occurrence " + std::to_string(o) + " badly wired");
    if (g.edge_dst(oc.entry) != oc.vertex || g.edge_src(oc.entry) != tree.occ[oc.parent].vertex)
      return fail("sigma_rules", "entry edge endpoints disagree at occurrence " + std::to_string(o));
    if (oc.sigma != g.edge_t(oc.entry))
      return fail("sigma_rules", "sigma differs from entry timestamp at " + std::to_string(o));
    if (oc.sigma < tree.occ[oc.parent].sigma)
      return fail("sigma_rules", "sigma decreases along tree edge into " + std::to_string(o));
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto ids = tree.occurrences_of(v);
    for (size_t i = 0; i + 1 < ids.size(); ++i)
      if (tree.occ[ids[i]].sigma <= tree.occ[ids[i + 1]].sigma)
        return fail("sigma_rules", "arrivals not strictly improving at " + g.label(v));
  }

  // Label census.
  std::array<size_t, 6> counts{};
  for (EdgeLabel l : res.labels) counts[static_cast<size_t>(l)]++;
  size_t traversed = g.num_edges() - counts[static_cast<size_t>(EdgeLabel::NonTraversed)];
  if (traversed != tree.log.size())
    return fail("labels_partition", "labelled-edge count disagrees with log");
  if (counts[static_cast<size_t>(EdgeLabel::Tree)] != tree.occ.size() - 1)
    return fail("labels_partition", "tree-labelled edges do not match occurrence count");
  bool is_bfs = tree.kind == TraversalKind::BFS;
  size_t dfs_only = counts[static_cast<size_t>(EdgeLabel::Forward)] +
                    counts[static_cast<size_t>(EdgeLabel::Backward)] +
                    counts[static_cast<size_t>(EdgeLabel::Cross)];
  if (is_bfs && dfs_only != 0)
    return fail("labels_partition", "ancestry labels on a breadth-first run");
  if (!is_bfs && counts[static_cast<size_t>(EdgeLabel::NonTree)] != 0)
    return fail("labels_partition", "non_tree label on a depth-first run");

  if (is_bfs) {
    for (OccId o = 1; o < tree.occ.size(); ++o) {
      if (tree.occ[o].dist != tree.occ[tree.occ[o].parent].dist + 1)
        return fail("bfs_levels", "depth is not parent depth + 1");
      if (tree.occ[o - 1].dist > tree.occ[o].dist)
        return fail("bfs_levels", "queue depths not monotone");
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto ids = tree.occurrences_of(v);
      for (size_t i = 0; i + 1 < ids.size(); ++i)
        if (tree.occ[ids[i]].dist >= tree.occ[ids[i + 1]].dist)
          return fail("bfs_levels", "record depths not increasing at " + g.label(v));
    }
  } else {
    auto cycles = extract_cycles(tree, g);
    if (cycles.size() != counts[static_cast<size_t>(EdgeLabel::Backward)])
      return fail("cycles_valid", "cycle count differs from backward-edge count");
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        EdgeId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (g.edge_dst(a) != g.edge_src(b))
          return fail("cycles_valid", "cycle edges do not chain");
        if (i + 1 < cyc.size() && g.edge_t(a) > g.edge_t(b))
          return fail("cycles_valid", "cycle timestamps decrease");
      }
    }
  }
  return std::nullopt;
}

template <typename T>
std::string show(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

MaybeFail check_case(const TemporalGraph& g, VertexId source, Timestamp t_s, Mutation mut) {
  SimulateOptions sopts;
  sopts.v1_pick_latest = mut == Mutation::DfsV1PickLatest;

  TraversalResult r1 = dfs_v1(g, source, t_s);
  TraversalResult r2 = dfs_v2(g, source, t_s);
  TraversalResult rb = bfs(g, source, t_s);

  if (auto d = compare_trees(r1.tree, simulate_definition(g, TraversalKind::DFS_V1, source, t_s, sopts)))
    return CaseFail{"dfs_v1_matches_reference", *d};
  if (auto d = compare_trees(r2.tree, simulate_definition(g, TraversalKind::DFS_V2, source, t_s)))
    return CaseFail{"dfs_v2_matches_reference", *d};
  if (auto d = compare_trees(rb.tree, simulate_definition(g, TraversalKind::BFS, source, t_s)))
    return CaseFail{"bfs_matches_reference", *d};

  const std::array<std::pair<const TraversalResult*, const char*>, 3> all = {
      {{&r1, "dfs_v1"}, {&r2, "dfs_v2"}, {&rb, "bfs"}}};
  for (auto [res, name] : all)
    if (auto f = tree_invariants(g, *res, name, t_s)) return f;

  // The three runs agree on what they reached and what they consumed.
  auto reached1 = reachable_set(r1.tree);
  if (reached1 != reachable_set(r2.tree) || reached1 != reachable_set(rb.tree))
    return CaseFail{"reachability_agrees", "vertex sets differ between traversal kinds"};
  std::vector<std::vector<bool>> trv;
  for (auto [res, name] : all) {
    std::vector<bool> bm(g.num_edges(), false);
    for (const auto& le : res->tree.log) bm[le.edge] = true;
    trv.push_back(std::move(bm));
  }
  if (trv[0] != trv[1] || trv[0] != trv[2])
    return CaseFail{"traversed_set_agrees", "traversed edge sets differ between kinds"};

  auto arrivals = exhaustive_foremost(g, source, t_s);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& a = arrivals[g.edge_src(e)];
    bool expect = a.has_value() && *a <= g.edge_t(e);
    if (trv[0][e] != expect)
      return CaseFail{"traversed_set_agrees",
                      "edge " + edge_str(g, e) + (expect ? " reachable but never traversed"
                                                         : " traversed but unreachable")};
  }

  StaticGraph proj = project_static(g);
  auto stat = static_reachable_set(proj, source);
  if (!std::includes(stat.begin(), stat.end(), reached1.begin(), reached1.end()))
    return CaseFail{"static_superset", "time-respecting reach escapes the static reach"};

  // Earliest arrivals, against brute force, for every kind.
  for (auto [res, name] : all) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool reached = res->tree.first_occ[v] != NO_OCC;
      if (reached != arrivals[v].has_value())
        return CaseFail{"foremost_matches_exhaustive",
                        std::string(name) + ": reachability of " + g.label(v) + " wrong"};
      if (reached && res->tree.occ[res->tree.last_occ[v]].sigma != *arrivals[v])
        return CaseFail{"foremost_matches_exhaustive",
                        std::string(name) + ": arrival at " + g.label(v) + " is " +
                            std::to_string(res->tree.occ[res->tree.last_occ[v]].sigma) +
                            ", brute force says " + show(arrivals[v])};
    }
  }

  auto fm_hops = exhaustive_foremost_hops(g, source, t_s);
  auto min_hops = exhaustive_shortest(g, source, t_s);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (rb.tree.first_occ[v] == NO_OCC) continue;
    uint32_t got_fm = rb.tree.occ[rb.tree.last_occ[v]].dist;
    if (!fm_hops[v] || got_fm != *fm_hops[v])
      return CaseFail{"foremost_hops_match", "hops among earliest-arrival paths to " + g.label(v) +
                                                 ": " + std::to_string(got_fm) + " vs " +
                                                 show(fm_hops[v])};
    uint32_t got_sh = rb.tree.occ[rb.tree.first_occ[v]].dist;
    if (!min_hops[v] || got_sh != *min_hops[v])
      return CaseFail{"shortest_matches_exhaustive",
                      "hops to " + g.label(v) + ": " + std::to_string(got_sh) + " vs " +
                          show(min_hops[v])};
  }

  // Foremost/shortest paths materialize and justify their reported values.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (rb.tree.first_occ[v] == NO_OCC) continue;
    PathAnswer pf = tree_path(rb.tree, rb.tree.last_occ[v], g);
    if (auto why = check_path(g, pf, source, v, t_s))
      return CaseFail{"foremost_paths_valid", *why};
    if (v != source && pf.t_end != *arrivals[v])
      return CaseFail{"foremost_paths_valid", "path to " + g.label(v) + " misses its arrival"};
    PathAnswer ps = tree_path(rb.tree, rb.tree.first_occ[v], g);
    if (auto why = check_path(g, ps, source, v, t_s))
      return CaseFail{"shortest_paths_valid", *why};
    if (ps.hops() != rb.tree.occ[rb.tree.first_occ[v]].dist)
      return CaseFail{"shortest_paths_valid", "hop count of path to " + g.label(v) + " wrong"};
  }

  // Interval index: shape, agreement with materialized paths, window queries.
  OccurrenceIndex idx = build_occurrence_index(r2.tree);
  if (auto probs = validate_occurrence_index(idx); !probs.empty())
    return CaseFail{"index_double_monotonic", probs.front()};
  for (const auto& en : idx.entries) {
    PathAnswer p = tree_path(r2.tree, en.occ, g);
    if (p.t_start != en.t_start || p.t_end != en.t_end)
      return CaseFail{"index_double_monotonic", "index entry disagrees with its tree path"};
  }

  std::vector<Timestamp> dts = distinct_timestamps(g);
  std::vector<std::pair<Timestamp, Timestamp>> windows{{t_s, T_INF}};
  if (!dts.empty()) {
    Timestamp med = dts[dts.size() / 2], hi = dts.back();
    for (auto w : {std::pair<Timestamp, Timestamp>{t_s, med},
                   {t_s, hi},
                   {med, hi},
                   {med, med},
                   {t_s, t_s}})
      if (w.first >= t_s && w.first <= w.second) windows.push_back(w);
  }
  for (auto [tx, ty] : windows) {
    FastestPaths fp = fastest_paths(idx, tx, ty);
    auto ex = exhaustive_fastest(g, source, tx, ty);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (fp.has(v) != ex[v].has_value() || (fp.has(v) && fp.duration[v] != *ex[v]))
        return CaseFail{"fastest_matches_exhaustive",
                        "window [" + std::to_string(tx) + "," +
                            (ty == T_INF ? std::string("inf") : std::to_string(ty)) + "] at " +
                            g.label(v) + ": " +
                            (fp.has(v) ? std::to_string(fp.duration[v]) : "none") + " vs " +
                            show(ex[v])};
      if (!fp.has(v) || v == source) continue;
      PathAnswer p = tree_path(r2.tree, fp.best[v], g);
      if (auto why = check_path(g, p, source, v, tx))
        return CaseFail{"fastest_paths_valid", *why};
      if (p.t_end > ty || p.t_end - p.t_start != fp.duration[v])
        return CaseFail{"fastest_paths_valid",
                        "window [" + std::to_string(tx) + ",..] path to " + g.label(v) +
                            " does not justify its duration"};
    }
  }

  std::vector<Timestamp> froms{t_s, t_s + 1};
  if (!dts.empty()) {
    froms.push_back(dts[dts.size() / 2]);
    froms.push_back(dts.back());
    froms.push_back(dts.back() + 1);
  }
  std::sort(froms.begin(), froms.end());
  froms.erase(std::unique(froms.begin(), froms.end()), froms.end());
  for (Timestamp t : froms) {
    if (t < t_s) continue;
    ForemostFrom ff = foremost_from(idx, t);
    auto ex = exhaustive_foremost(g, source, t);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (ff.has(v) != ex[v].has_value() || (ff.has(v) && ff.arrival[v] != *ex[v]))
        return CaseFail{"foremost_from_matches_exhaustive",
                        "departure " + std::to_string(t) + " at " + g.label(v) + ": " +
                            (ff.has(v) ? std::to_string(ff.arrival[v]) : "none") + " vs " +
                            show(ex[v])};
    }
  }

  // The conventional algorithms (benchmark opponents) agree with brute force.
  auto bf = baseline_foremost(g, source, t_s);
  auto bs = baseline_shortest(g, source, t_s);
  auto bfast = baseline_fastest(g, source, t_s, T_INF);
  auto exfast = exhaustive_fastest(g, source, t_s, T_INF);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (bf[v] != arrivals[v])
      return CaseFail{"baseline_matches_exhaustive",
                      "arrival at " + g.label(v) + ": " + show(bf[v]) + " vs " + show(arrivals[v])};
    if (bs[v] != min_hops[v])
      return CaseFail{"baseline_matches_exhaustive",
                      "hops to " + g.label(v) + ": " + show(bs[v]) + " vs " + show(min_hops[v])};
    if (bfast[v] != exfast[v])
      return CaseFail{"baseline_matches_exhaustive", "duration to " + g.label(v) + ": " +
                                                         show(bfast[v]) + " vs " + show(exfast[v])};
  }
  return std::nullopt;
}

MaybeFail check_case_guarded(const TemporalGraph& g, VertexId source, Timestamp t_s,
                             Mutation mut) {
  try {
    return check_case(g, source, t_s, mut);
  } catch (const std::exception& e) {
    return CaseFail{"exception", e.what()};
  }
}

TemporalGraph rebuild(const std::vector<std::string>& labels,
                      const std::vector<TemporalEdge>& edges) {
  LabelTable lt;
  for (const auto& l : labels) lt.intern(l);
  return TemporalGraph::from_edges(edges, std::move(lt));
}

Violation make_violation(uint32_t inst, uint64_t inst_seed, const TemporalGraph& g,
                         VertexId source, Timestamp t_s, CaseFail fail,
                         const VerifyOptions& opts) {
  Violation vio;
  vio.instance = inst;
  vio.instance_seed = inst_seed;
  vio.source_label = g.label(source);
  vio.t_s = t_s;
  for (VertexId v = 0; v < g.num_vertices(); ++v) vio.vertex_labels.push_back(g.label(v));
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    vio.edges.push_back({g.edge_src(e), g.edge_dst(e), g.edge_t(e)});

  if (opts.shrink) {
    // Greedy edge removal: keep any candidate that still fails anything.
    bool improved = true;
    while (improved) {
      improved = false;
      for (size_t i = 0; i < vio.edges.size(); ++i) {
        std::vector<TemporalEdge> cand = vio.edges;
        cand.erase(cand.begin() + static_cast<ptrdiff_t>(i));
        TemporalGraph cg = rebuild(vio.vertex_labels, cand);
        if (auto f2 = check_case_guarded(cg, source, t_s, opts.mutate)) {
          vio.edges = std::move(cand);
          fail = *f2;
          improved = true;
          break;
        }
      }
    }
  }
  vio.check = std::move(fail.check);
  vio.detail = std::move(fail.detail);
  return vio;
}

}  // namespace

std::string Violation::dump() const {
  std::ostringstream os;
  os << "verification failure: " << check << "\n";
  os << "detail: " << detail << "\n";
  os << "instance " << instance << " (seed " << instance_seed << "), source '" << source_label
     << "', t_s " << t_s << "\n";
  os << "graph: n=" << vertex_labels.size() << " m=" << edges.size() << "\n";
  for (const auto& e : edges)
    os << "  " << vertex_labels[e.src] << " " << vertex_labels[e.dst] << " " << e.t << "\n";
  return os.str();
}

bool is_reference_check(const std::string& check) {
  static const std::set<std::string> refs = {
      "dfs_v1_matches_reference",  "dfs_v2_matches_reference",
      "bfs_matches_reference",     "foremost_matches_exhaustive",
      "foremost_hops_match",       "shortest_matches_exhaustive",
      "fastest_matches_exhaustive", "foremost_from_matches_exhaustive",
      "baseline_matches_exhaustive"};
  return refs.count(check) > 0;
}

VerifySummary run_verification(const VerifyOptions& opts, std::ostream* progress) {
  VerifySummary sum;
  std::mt19937_64 master(opts.seed);
  for (uint32_t inst = 0; inst < opts.instances; ++inst) {
    uint64_t inst_seed = master();
    std::mt19937_64 rng(inst_seed);
    uint32_t n = std::uniform_int_distribution<uint32_t>(2, opts.max_n)(rng);
    Timestamp t_max = std::uniform_int_distribution<Timestamp>(0, opts.max_t)(rng);
    uint64_t cap = static_cast<uint64_t>(n) * (n - 1) * static_cast<uint64_t>(t_max + 1);
    uint32_t m = std::uniform_int_distribution<uint32_t>(
        1, static_cast<uint32_t>(std::min<uint64_t>(opts.max_m, cap)))(rng);
    TemporalGraph g = generate_random(n, m, t_max, rng());
    sum.instances_run++;

    if (auto probs = validate_graph(g); !probs.empty()) {
      sum.violation = make_violation(inst, inst_seed, g, 0, 0,
                                     {"graph_builds_validly", probs.front()}, opts);
      return sum;
    }

    std::vector<Timestamp> dts = distinct_timestamps(g);
    std::vector<Timestamp> starts{0};
    if (!dts.empty() && dts[dts.size() / 2] != 0) starts.push_back(dts[dts.size() / 2]);

    for (VertexId source = 0; source < n; ++source) {
      for (Timestamp t_s : starts) {
        sum.cases_run++;
        if (auto fail = check_case_guarded(g, source, t_s, opts.mutate)) {
          sum.violation = make_violation(inst, inst_seed, g, source, t_s, *fail, opts);
          return sum;
        }
      }
    }
    if (progress && (inst + 1) % 25 == 0)
      *progress << "verified " << (inst + 1) << "/" << opts.instances << " instances\n";
  }
  return sum;
}

}  // namespace tgt
