#include "tgt/graph.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace tgt {

TemporalGraph TemporalGraph::from_edges(std::vector<TemporalEdge> edges, LabelTable labels) {
  const size_t n = labels.size();
  const size_t m = edges.size();

  for (const auto& e : edges) {
    if (e.src >= n || e.dst >= n) throw DomainError("edge endpoint outside label table");
    if (e.src == e.dst)
      throw DomainError("self-loop (" + labels.label(e.src) + ") reached graph construction");
  }

  std::sort(edges.begin(), edges.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.t != b.t) return a.t < b.t;
    return a.dst < b.dst;
  });

  TemporalGraph g;
  g.labels_ = std::move(labels);
  g.src_.resize(m);
  g.dst_.resize(m);
  g.t_.resize(m);
  for (size_t i = 0; i < m; ++i) {
    g.src_[i] = edges[i].src;
    g.dst_[i] = edges[i].dst;
    g.t_[i] = edges[i].t;
  }
  edges.clear();
  edges.shrink_to_fit();

  g.row_off_.assign(n + 1, 0);
  for (size_t i = 0; i < m; ++i) g.row_off_[g.src_[i] + 1]++;
  for (size_t v = 0; v < n; ++v) g.row_off_[v + 1] += g.row_off_[v];

  g.in_deg_.assign(n, 0);
  for (size_t i = 0; i < m; ++i) g.in_deg_[g.dst_[i]]++;

  g.grouped_.resize(m);
  for (size_t i = 0; i < m; ++i) g.grouped_[i] = static_cast<EdgeId>(i);
  std::sort(g.grouped_.begin(), g.grouped_.end(), [&g](EdgeId a, EdgeId b) {
    if (g.src_[a] != g.src_[b]) return g.src_[a] < g.src_[b];
    if (g.dst_[a] != g.dst_[b]) return g.dst_[a] < g.dst_[b];
    return g.t_[a] < g.t_[b];
  });

  g.pair_off_.assign(n + 1, 0);
  for (size_t i = 0; i < m; ++i) {
    EdgeId e = g.grouped_[i];
    bool run_start = i == 0 || g.src_[g.grouped_[i - 1]] != g.src_[e] ||
                     g.dst_[g.grouped_[i - 1]] != g.dst_[e];
    if (!run_start && g.t_[g.grouped_[i - 1]] == g.t_[e])
      throw DomainError("duplicate temporal edge (" + g.labels_.label(g.src_[e]) + ", " +
                        g.labels_.label(g.dst_[e]) + ", " + std::to_string(g.t_[e]) + ")");
    if (run_start) {
      g.pair_dst_.push_back(g.dst_[e]);
      g.pair_lo_.push_back(static_cast<uint32_t>(i));
      g.pair_off_[g.src_[e] + 1]++;
    }
  }
  g.pair_lo_.push_back(static_cast<uint32_t>(m));
  for (size_t v = 0; v < n; ++v) g.pair_off_[v + 1] += g.pair_off_[v];

  return g;
}

EdgeId TemporalGraph::find_edge(VertexId src, VertexId dst, Timestamp t) const {
  if (src >= num_vertices()) return NO_EDGE;
  auto [plo, phi] = pair_range(src);
  // pair_dst_ is sorted within a vertex's range
  auto first = pair_dst_.begin() + plo;
  auto last = pair_dst_.begin() + phi;
  auto it = std::lower_bound(first, last, dst);
  if (it == last || *it != dst) return NO_EDGE;
  uint32_t p = static_cast<uint32_t>(it - pair_dst_.begin());
  uint32_t lo = pair_lo_[p], hi = pair_lo_[p + 1];
  while (lo < hi) {
    uint32_t mid = lo + (hi - lo) / 2;
    if (t_[grouped_[mid]] < t)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < pair_lo_[p + 1] && t_[grouped_[lo]] == t) return grouped_[lo];
  return NO_EDGE;
}

namespace {

Timestamp parse_timestamp(const std::string& tok, size_t line) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno == ERANGE) throw ParseError(line, "timestamp out of range: '" + tok + "'");
  if (end == tok.c_str() || *end != '\0')
    throw ParseError(line, "bad timestamp: '" + tok + "'");
  return static_cast<Timestamp>(v);
}

}  // namespace

TemporalGraph load_edge_list(std::istream& in, const LoadOptions& opts, LoadReport* report) {
  LoadReport rep;
  LabelTable labels;
  std::vector<TemporalEdge> edges;
  std::string line;
  size_t lineno = 0;
  std::vector<std::string> toks;

  while (std::getline(in, line)) {
    ++lineno;
    ++rep.lines_total;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    if (opts.koblenz && line[start] == '%') continue;

    toks.clear();
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) toks.push_back(tok);

    if (opts.koblenz) {
      if (toks.size() != 3 && toks.size() != 4)
        throw ParseError(lineno, "expected 'SRC DST [WEIGHT] T', got " +
                                     std::to_string(toks.size()) + " fields");
    } else if (toks.size() != 3) {
      throw ParseError(lineno,
                       "expected 'SRC DST T', got " + std::to_string(toks.size()) + " fields");
    }

    Timestamp t = parse_timestamp(toks.back(), lineno);
    VertexId u = labels.intern(toks[0]);
    VertexId v = labels.intern(toks[1]);
    if (u == v) {
      rep.self_loops_dropped++;
      continue;
    }
    edges.push_back({u, v, t});
    if (!opts.directed) edges.push_back({v, u, t});
  }

  // duplicate handling ahead of construction so counts can be reported
  std::sort(edges.begin(), edges.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.t < b.t;
  });
  size_t w = 0;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i > 0 && edges[i] == edges[i - 1]) {
      if (!opts.dedupe)
        throw DomainError("duplicate temporal edge (" + labels.label(edges[i].src) + ", " +
                          labels.label(edges[i].dst) + ", " + std::to_string(edges[i].t) +
                          "); pass dedupe to drop repeats");
      rep.duplicates_dropped++;
      continue;
    }
    edges[w++] = edges[i];
  }
  edges.resize(w);

  if (report) *report = rep;
  return TemporalGraph::from_edges(std::move(edges), std::move(labels));
}

TemporalGraph load_edge_list_file(const std::string& path, const LoadOptions& opts,
                                  LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_edge_list(in, opts, report);
}

void write_edge_list(const TemporalGraph& g, std::ostream& out) {
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out << g.label(g.edge_src(e)) << ' ' << g.label(g.edge_dst(e)) << ' ' << g.edge_t(e) << '\n';
}

StaticGraph project_static(const TemporalGraph& g) {
  StaticGraph s;
  const size_t n = g.num_vertices();
  s.offsets.assign(n + 1, 0);
  s.nbr.reserve(g.num_pairs());
  for (VertexId u = 0; u < n; ++u) {
    auto [plo, phi] = g.pair_range(u);
    for (uint32_t p = plo; p < phi; ++p) s.nbr.push_back(g.pair_dst(p));
    s.offsets[u + 1] = static_cast<uint32_t>(s.nbr.size());
  }
  return s;
}

TemporalGraph generate_random(uint32_t n, uint64_t m, Timestamp t_max, uint64_t seed) {
  if (n < 2) throw DomainError("generator needs n >= 2");
  if (t_max < 0) throw DomainError("generator needs t_max >= 0");
  // capacity n*(n-1)*(t_max+1) without overflow
  unsigned __int128 cap = static_cast<unsigned __int128>(n) * (n - 1);
  cap *= static_cast<unsigned __int128>(t_max) + 1;
  if (static_cast<unsigned __int128>(m) > cap)
    throw DomainError("infeasible: m exceeds n*(n-1)*(t_max+1) distinct triples");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> pick_src(0, n - 1);
  std::uniform_int_distribution<uint32_t> pick_other(0, n - 2);
  std::uniform_int_distribution<uint64_t> pick_t(0, static_cast<uint64_t>(t_max));

  std::vector<TemporalEdge> edges;
  edges.reserve(m);
  auto draw = [&] {
    VertexId u = pick_src(rng);
    VertexId v = pick_other(rng);
    if (v >= u) ++v;
    return TemporalEdge{u, v, static_cast<Timestamp>(pick_t(rng))};
  };
  for (uint64_t i = 0; i < m; ++i) edges.push_back(draw());

  // de-duplicate and redraw the deficit until m distinct triples remain
  auto by_triple = [](const TemporalEdge& a, const TemporalEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.t < b.t;
  };
  for (;;) {
    std::sort(edges.begin(), edges.end(), by_triple);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() == m) break;
    uint64_t deficit = m - edges.size();
    for (uint64_t i = 0; i < deficit; ++i) edges.push_back(draw());
  }

  LabelTable labels;
  for (uint32_t v = 0; v < n; ++v) labels.intern(std::to_string(v));
  return TemporalGraph::from_edges(std::move(edges), std::move(labels));
}

GraphStats compute_stats(const TemporalGraph& g) {
  GraphStats st;
  st.n = g.num_vertices();
  st.m = g.num_edges();
  st.static_edges = g.num_pairs();
  for (VertexId u = 0; u < st.n; ++u) {
    st.d_max_temporal = std::max<uint64_t>(st.d_max_temporal, g.out_degree(u));
    st.d_max_static = std::max<uint64_t>(st.d_max_static, g.static_out_degree(u));
  }
  for (uint32_t p = 0; p < st.static_edges; ++p)
    st.d_max_pair = std::max<uint64_t>(st.d_max_pair, g.pair_hi(p) - g.pair_lo(p));
  if (st.n > 0) {
    st.d_avg_temporal = static_cast<double>(st.m) / static_cast<double>(st.n);
    st.d_avg_static = static_cast<double>(st.static_edges) / static_cast<double>(st.n);
  }
  if (st.static_edges > 0)
    st.d_avg_pair = static_cast<double>(st.m) / static_cast<double>(st.static_edges);
  st.snapshots = distinct_timestamps(g).size();
  return st;
}

std::vector<Timestamp> distinct_timestamps(const TemporalGraph& g) {
  std::vector<Timestamp> ts;
  ts.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) ts.push_back(g.edge_t(e));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

Timestamp pick_ts_fraction(const std::vector<Timestamp>& distinct_ts, double f) {
  if (distinct_ts.empty()) throw DomainError("no timestamps to pick from");
  if (f < 0.0 || f > 1.0) throw DomainError("timestamp fraction outside [0, 1]");
  double k = std::ceil(f * static_cast<double>(distinct_ts.size()));
  size_t idx = k < 1.0 ? 0 : static_cast<size_t>(k) - 1;
  if (idx >= distinct_ts.size()) idx = distinct_ts.size() - 1;
  return distinct_ts[idx];
}

std::vector<std::string> validate_graph(const TemporalGraph& g) {
  std::vector<std::string> problems;
  const size_t n = g.num_vertices();
  const size_t m = g.num_edges();

  uint64_t out_sum = 0, in_sum = 0;
  for (VertexId u = 0; u < n; ++u) {
    out_sum += g.out_degree(u);
    in_sum += g.in_degree(u);
    auto [lo, hi] = g.row(u);
    for (EdgeId e = lo; e < hi; ++e) {
      if (g.edge_src(e) != u) {
        problems.push_back("row of " + g.label(u) + " holds edge with src " +
                           g.label(g.edge_src(e)));
        break;
      }
      if (g.edge_dst(e) == u) problems.push_back("self-loop at " + g.label(u));
      if (e > lo) {
        bool ordered = g.edge_t(e - 1) < g.edge_t(e) ||
                       (g.edge_t(e - 1) == g.edge_t(e) && g.edge_dst(e - 1) < g.edge_dst(e));
        if (!ordered) {
          problems.push_back("chronological row of " + g.label(u) + " out of order");
          break;
        }
      }
    }
  }
  if (out_sum != m) problems.push_back("out-degree sum != m");
  if (in_sum != m) problems.push_back("in-degree sum != m");

  std::vector<bool> seen(m, false);
  uint64_t grouped_entries = 0;
  for (VertexId u = 0; u < n; ++u) {
    auto [plo, phi] = g.pair_range(u);
    for (uint32_t p = plo; p < phi; ++p) {
      if (p > plo && g.pair_dst(p - 1) >= g.pair_dst(p))
        problems.push_back("pair runs of " + g.label(u) + " not dst-sorted");
      if (g.pair_lo(p) >= g.pair_hi(p)) problems.push_back("empty pair run");
      for (uint32_t k = g.pair_lo(p); k < g.pair_hi(p); ++k) {
        EdgeId e = g.grouped(k);
        ++grouped_entries;
        if (e >= m) {
          problems.push_back("grouped position out of range");
          continue;
        }
        if (seen[e]) problems.push_back("grouped view repeats an edge id");
        seen[e] = true;
        if (g.edge_src(e) != u || g.edge_dst(e) != g.pair_dst(p))
          problems.push_back("pair run holds a foreign edge");
        if (k > g.pair_lo(p) && g.edge_t(g.grouped(k - 1)) >= g.edge_t(e))
          problems.push_back("pair run of " + g.label(u) + "->" + g.label(g.pair_dst(p)) +
                             " not strictly t-ascending (duplicate edge?)");
      }
    }
  }
  if (grouped_entries != m) problems.push_back("grouped view does not cover all edges");
  return problems;
}

}  // namespace tgt
