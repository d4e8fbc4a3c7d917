#include "tgt/bench.hpp"

#include "tgt/oracle.hpp"
#include "tgt/paths.hpp"
#include "tgt/traversal.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace tgt {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  size_t k = xs.size() / 2;
  return xs.size() % 2 ? xs[k] : (xs[k - 1] + xs[k]) / 2;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

std::vector<VertexId> random_sources(const TemporalGraph& g, uint32_t k, uint64_t seed) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0u);
  if (k >= all.size()) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

std::vector<VertexId> top_degree_sources(const TemporalGraph& g, uint32_t k) {
  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0u);
  std::stable_sort(all.begin(), all.end(), [&](VertexId a, VertexId b) {
    return g.out_degree(a) != g.out_degree(b) ? g.out_degree(a) > g.out_degree(b) : a < b;
  });
  if (k < all.size()) all.resize(k);
  return all;
}

}  // namespace

BenchReport run_bench(const TemporalGraph& g, const BenchOptions& opts) {
  BenchReport rep;
  rep.n = g.num_vertices();
  rep.m = g.num_edges();
  rep.seed = opts.seed;
  rep.with_timings = opts.with_timings;

  std::vector<Timestamp> dts = distinct_timestamps(g);
  StaticGraph proj = project_static(g);

  const std::pair<const char*, std::vector<VertexId>> cohorts[] = {
      {"random", random_sources(g, opts.num_sources, opts.seed)},
      {"top-out-degree", top_degree_sources(g, opts.num_sources)},
  };

  for (const auto& [name, sources] : cohorts) {
    std::vector<double> vstat;
    for (VertexId s : sources)
      vstat.push_back(static_cast<double>(static_reachable_set(proj, s).size()));
    double v_r_static = mean(vstat);

    for (double frac : opts.ts_fracs) {
      Timestamp t_s = dts.empty() ? 0 : pick_ts_fraction(dts, frac);
      BenchRow row;
      row.cohort = name;
      row.ts_frac = frac;
      row.t_s = t_s;
      row.v_r_static = v_r_static;

      std::vector<double> occ1, occ2, occb, etrv, vr, t1, t2, tb;
      for (VertexId s : sources) {
        auto t0 = Clock::now();
        TraversalTree tv1 = traverse(g, TraversalKind::DFS_V1, s, t_s);
        t1.push_back(ms_since(t0));
        t0 = Clock::now();
        TraversalTree tv2 = traverse(g, TraversalKind::DFS_V2, s, t_s);
        t2.push_back(ms_since(t0));
        t0 = Clock::now();
        TraversalTree tvb = traverse(g, TraversalKind::BFS, s, t_s);
        tb.push_back(ms_since(t0));

        occ1.push_back(static_cast<double>(tv1.occ.size()));
        occ2.push_back(static_cast<double>(tv2.occ.size()));
        occb.push_back(static_cast<double>(tvb.occ.size()));
        etrv.push_back(static_cast<double>(tv1.log.size()));
        vr.push_back(static_cast<double>(reachable_set(tv1).size()));
      }
      row.occ_dfs_v1 = mean(occ1);
      row.occ_dfs_v2 = mean(occ2);
      row.occ_bfs = mean(occb);
      row.e_trv = mean(etrv);
      row.v_r = mean(vr);
      if (opts.with_timings) {
        row.ms_dfs_v1 = median(t1);
        row.ms_dfs_v2 = median(t2);
        row.ms_bfs = median(tb);
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

QueryBenchReport run_query_bench(const TemporalGraph& g, uint32_t num_sources, uint64_t seed,
                                 Timestamp t_s) {
  QueryBenchReport rep;
  rep.n = g.num_vertices();
  rep.m = g.num_edges();
  rep.t_s = t_s;

  std::vector<VertexId> sources = random_sources(g, num_sources, seed);
  rep.num_sources = static_cast<uint32_t>(sources.size());

  std::vector<double> ours_fm, base_fm, ours_fast, base_fast;
  for (VertexId s : sources) {
    auto t0 = Clock::now();
    ForemostPaths fp = foremost_paths(g, s, t_s, PathEngine::BFS);
    ours_fm.push_back(ms_since(t0));

    t0 = Clock::now();
    auto base_arr = baseline_foremost(g, s, t_s);
    base_fm.push_back(ms_since(t0));

    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool same = fp.has(v) == base_arr[v].has_value() &&
                  (!fp.has(v) || fp.arrival(v) == *base_arr[v]);
      if (!same)
        throw std::logic_error("earliest-arrival answers diverge from the baseline at vertex " +
                               g.label(v));
    }

    t0 = Clock::now();
    TraversalTree tv2 = traverse_tree(g, TraversalKind::DFS_V2, s, t_s);
    OccurrenceIndex idx = build_occurrence_index(tv2);
    FastestPaths fast = fastest_paths(idx, t_s, T_INF);
    ours_fast.push_back(ms_since(t0));

    t0 = Clock::now();
    auto base_dur = baseline_fastest(g, s, t_s, T_INF);
    base_fast.push_back(ms_since(t0));

    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      bool same = fast.has(v) == base_dur[v].has_value() &&
                  (!fast.has(v) || fast.duration[v] == *base_dur[v]);
      if (!same)
        throw std::logic_error("duration answers diverge from the baseline at vertex " +
                               g.label(v));
    }
  }

  auto push = [&](const char* what, std::vector<double> ours, std::vector<double> base) {
    QueryBenchRow row;
    row.objective = what;
    row.ours_ms_median = median(std::move(ours));
    row.baseline_ms_median = median(std::move(base));
    row.speedup = row.baseline_ms_median / std::max(row.ours_ms_median, 1e-6);
    rep.rows.push_back(std::move(row));
  };
  push("foremost", std::move(ours_fm), std::move(base_fm));
  push("fastest", std::move(ours_fast), std::move(base_fast));
  return rep;
}

std::string bench_tsv(const BenchReport& r) {
  std::ostringstream os;
  os << "# bench/1\tn=" << r.n << "\tm=" << r.m << "\tseed=" << r.seed
     << "\ttimings=" << (r.with_timings ? 1 : 0) << "\n";
  os << "cohort\tts_frac\tt_s\tocc_dfs_v1\tocc_dfs_v2\tocc_bfs\te_trv\tv_r\tv_r_static"
     << "\tms_dfs_v1\tms_dfs_v2\tms_bfs\n";
  for (const auto& row : r.rows) {
    os << row.cohort << "\t" << row.ts_frac << "\t" << row.t_s << "\t" << row.occ_dfs_v1 << "\t"
       << row.occ_dfs_v2 << "\t" << row.occ_bfs << "\t" << row.e_trv << "\t" << row.v_r << "\t"
       << row.v_r_static;
    if (r.with_timings)
      os << "\t" << row.ms_dfs_v1 << "\t" << row.ms_dfs_v2 << "\t" << row.ms_bfs << "\n";
    else
      os << "\t-\t-\t-\n";
  }
  return os.str();
}

std::string bench_json(const BenchReport& r) {
  Json j;
  j["schema"] = "bench/1";
  j["n"] = r.n;
  j["m"] = r.m;
  j["seed"] = r.seed;
  j["timings"] = r.with_timings;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr{{"cohort", row.cohort},
            {"ts_frac", row.ts_frac},
            {"t_s", row.t_s},
            {"occ_dfs_v1", row.occ_dfs_v1},
            {"occ_dfs_v2", row.occ_dfs_v2},
            {"occ_bfs", row.occ_bfs},
            {"e_trv", row.e_trv},
            {"v_r", row.v_r},
            {"v_r_static", row.v_r_static}};
    if (r.with_timings) {
      jr["ms_dfs_v1"] = row.ms_dfs_v1;
      jr["ms_dfs_v2"] = row.ms_dfs_v2;
      jr["ms_bfs"] = row.ms_bfs;
    }
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string query_bench_tsv(const QueryBenchReport& r) {
  std::ostringstream os;
  os << "# qbench/1\tn=" << r.n << "\tm=" << r.m << "\tsources=" << r.num_sources
     << "\tt_s=" << r.t_s << "\n";
  os << "objective\tours_ms\tbaseline_ms\tspeedup\n";
  for (const auto& row : r.rows)
    os << row.objective << "\t" << row.ours_ms_median << "\t" << row.baseline_ms_median << "\t"
       << row.speedup << "\n";
  return os.str();
}

std::string query_bench_json(const QueryBenchReport& r) {
  Json j;
  j["schema"] = "qbench/1";
  j["n"] = r.n;
  j["m"] = r.m;
  j["sources"] = r.num_sources;
  j["t_s"] = r.t_s;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"objective", row.objective},
                        {"ours_ms", row.ours_ms_median},
                        {"baseline_ms", row.baseline_ms_median},
                        {"speedup", row.speedup}});
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace tgt
