#include "tgt/serialize.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace tgt {

namespace {

using Json = nlohmann::ordered_json;

const char* kind_name(TraversalKind k) {
  switch (k) {
    case TraversalKind::DFS_V1: return "dfs-v1";
    case TraversalKind::DFS_V2: return "dfs-v2";
    case TraversalKind::BFS: return "bfs";
  }
  return "?";
}

Json edge_json(const TemporalGraph& g, EdgeId e) {
  return Json{{"src", g.label(g.edge_src(e))}, {"dst", g.label(g.edge_dst(e))}, {"t", g.edge_t(e)}};
}

std::string path_field(const TemporalGraph& g, const PathAnswer& p) {
  if (p.edges.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (i) os << ";";
    os << g.label(g.edge_src(e)) << "-" << g.label(g.edge_dst(e)) << "@" << g.edge_t(e);
  }
  return os.str();
}

}  // namespace

std::string stats_json(const GraphStats& s) {
  Json j{{"n", s.n},
         {"m", s.m},
         {"static_edges", s.static_edges},
         {"d_avg_temporal", s.d_avg_temporal},
         {"d_max_temporal", s.d_max_temporal},
         {"d_avg_static", s.d_avg_static},
         {"d_max_static", s.d_max_static},
         {"d_avg_pair", s.d_avg_pair},
         {"d_max_pair", s.d_max_pair},
         {"snapshots", s.snapshots}};
  return j.dump(2) + "\n";
}

std::string stats_tsv(const GraphStats& s) {
  std::ostringstream os;
  os << "n\t" << s.n << "\n";
  os << "m\t" << s.m << "\n";
  os << "static_edges\t" << s.static_edges << "\n";
  os << "d_avg_temporal\t" << s.d_avg_temporal << "\n";
  os << "d_max_temporal\t" << s.d_max_temporal << "\n";
  os << "d_avg_static\t" << s.d_avg_static << "\n";
  os << "d_max_static\t" << s.d_max_static << "\n";
  os << "d_avg_pair\t" << s.d_avg_pair << "\n";
  os << "d_max_pair\t" << s.d_max_pair << "\n";
  os << "snapshots\t" << s.snapshots << "\n";
  return os.str();
}

std::string traversal_json(const TemporalGraph& g, const TraversalResult& r) {
  const TraversalTree& tree = r.tree;
  bool is_bfs = tree.kind == TraversalKind::BFS;
  Json j;
  j["schema"] = "traversal/1";
  j["kind"] = kind_name(tree.kind);
  j["source"] = g.label(tree.source);
  j["t_s"] = tree.t_s;

  Json occs = Json::array();
  for (OccId o = 0; o < tree.occ.size(); ++o) {
    const Occurrence& oc = tree.occ[o];
    Json jo;
    jo["occ"] = o;
    jo["vertex"] = g.label(oc.vertex);
    jo["sigma"] = oc.sigma;
    jo["parent"] = oc.parent == NO_OCC ? Json(nullptr) : Json(oc.parent);
    jo["entry"] = oc.entry == NO_EDGE ? Json(nullptr) : edge_json(g, oc.entry);
    if (is_bfs) jo["dist"] = oc.dist;
    occs.push_back(std::move(jo));
  }
  j["occurrences"] = std::move(occs);

  Json log = Json::array();
  for (const auto& le : tree.log) {
    Json jl = edge_json(g, le.edge);
    jl["label"] = edge_label_name(le.label);
    jl["from"] = le.from_occ;
    if (le.label == EdgeLabel::Backward) jl["ancestor"] = le.ancestor_occ;
    log.push_back(std::move(jl));
  }
  j["log"] = std::move(log);

  size_t counts[6] = {};
  for (EdgeLabel l : r.labels) counts[static_cast<size_t>(l)]++;
  Json census;
  census["tree"] = counts[static_cast<size_t>(EdgeLabel::Tree)];
  if (!is_bfs) {
    census["forward"] = counts[static_cast<size_t>(EdgeLabel::Forward)];
    census["backward"] = counts[static_cast<size_t>(EdgeLabel::Backward)];
    census["cross"] = counts[static_cast<size_t>(EdgeLabel::Cross)];
  } else {
    census["non_tree"] = counts[static_cast<size_t>(EdgeLabel::NonTree)];
  }
  census["non_traversed"] = counts[static_cast<size_t>(EdgeLabel::NonTraversed)];
  j["label_counts"] = std::move(census);

  j["counters"] = Json{{"edges_traversed", tree.counters.edges_traversed},
                       {"edges_scanned", tree.counters.edges_scanned},
                       {"search_probes", tree.counters.search_probes},
                       {"pair_probes", tree.counters.pair_probes}};

  Json reached = Json::array();
  for (VertexId v : reachable_set(tree)) reached.push_back(g.label(v));
  j["reached"] = std::move(reached);

  if (!is_bfs) {
    Json cycles = Json::array();
    for (const auto& cyc : extract_cycles(tree, g)) {
      Json jc = Json::array();
      for (EdgeId e : cyc) jc.push_back(edge_json(g, e));
      cycles.push_back(std::move(jc));
    }
    j["cycles"] = std::move(cycles);
  }
  return j.dump(2) + "\n";
}

std::string traversal_tsv(const TemporalGraph& g, const TraversalResult& r) {
  std::ostringstream os;
  os << "src\tdst\tt\tlabel\n";
  for (const auto& le : r.tree.log)
    os << g.label(g.edge_src(le.edge)) << "\t" << g.label(g.edge_dst(le.edge)) << "\t"
       << g.edge_t(le.edge) << "\t" << edge_label_name(le.label) << "\n";
  return os.str();
}

std::string paths_json(const TemporalGraph& g, const PathsReport& r) {
  Json j;
  j["schema"] = "paths/1";
  j["objective"] = r.objective;
  j["source"] = r.source;
  j["t_s"] = r.t_s;
  if (!r.params.empty()) {
    Json params = Json::object();
    for (const auto& [key, val] : r.params) params[key] = val == T_INF ? Json(nullptr) : Json(val);
    j["params"] = std::move(params);
  }
  Json results = Json::array();
  for (const auto& rec : r.records) {
    Json jr;
    jr["vertex"] = g.label(rec.vertex);
    jr[r.value_key] = rec.value;
    jr["hops"] = rec.path.hops();
    Json path = Json::array();
    for (EdgeId e : rec.path.edges) path.push_back(edge_json(g, e));
    jr["path"] = std::move(path);
    results.push_back(std::move(jr));
  }
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

std::string paths_tsv(const TemporalGraph& g, const PathsReport& r) {
  std::ostringstream os;
  const bool value_is_hops = r.value_key == "hops";
  os << "vertex\t" << r.value_key;
  if (!value_is_hops) os << "\thops";
  os << "\tpath\n";
  for (const auto& rec : r.records) {
    os << g.label(rec.vertex) << "\t" << rec.value;
    if (!value_is_hops) os << "\t" << rec.path.hops();
    os << "\t" << path_field(g, rec.path) << "\n";
  }
  return os.str();
}

}  // namespace tgt
