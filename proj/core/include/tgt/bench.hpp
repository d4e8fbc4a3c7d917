#pragma once

#include "tgt/graph.hpp"

#include <string>
#include <vector>

namespace tgt {

// Experiment drivers behind the CLI `bench` verb and the scaling checks:
// traversal measurements across start-time fractions and source cohorts, and
// a head-to-head of tree-based query answering against the conventional
// per-query algorithms.

struct BenchOptions {
  std::vector<double> ts_fracs = {0.0, 0.25, 0.5, 0.75};
  uint32_t num_sources = 20;
  uint64_t seed = 42;
  bool with_timings = true;  // false -> byte-identical output across runs
};

struct BenchRow {
  std::string cohort;  // "random" | "top-out-degree"
  double ts_frac = 0;
  Timestamp t_s = 0;
  double occ_dfs_v1 = 0, occ_dfs_v2 = 0, occ_bfs = 0;  // mean occurrence counts
  double e_trv = 0;      // mean traversed edges (agrees across kinds)
  double v_r = 0;        // mean reached vertices
  double v_r_static = 0; // mean statically reached vertices (t_s independent)
  double ms_dfs_v1 = 0, ms_dfs_v2 = 0, ms_bfs = 0;  // median wall milliseconds
};

struct BenchReport {
  size_t n = 0, m = 0;
  uint64_t seed = 0;
  bool with_timings = true;
  std::vector<BenchRow> rows;  // cohort-major, then ts_frac in option order
};

// Sources are drawn once per cohort and reused for every fraction, so the
// rows of one cohort are comparable.
BenchReport run_bench(const TemporalGraph& g, const BenchOptions& opts);

struct QueryBenchRow {
  std::string objective;  // "foremost" | "fastest"
  double ours_ms_median = 0;
  double baseline_ms_median = 0;
  double speedup = 0;  // baseline / ours
};

struct QueryBenchReport {
  size_t n = 0, m = 0;
  uint32_t num_sources = 0;
  Timestamp t_s = 0;
  std::vector<QueryBenchRow> rows;
};

// Medians over random sources. Each side answers the all-destinations query
// from scratch; answers are cross-checked and a mismatch throws.
QueryBenchReport run_query_bench(const TemporalGraph& g, uint32_t num_sources, uint64_t seed,
                                 Timestamp t_s = 0);

std::string bench_tsv(const BenchReport& r);
std::string bench_json(const BenchReport& r);
std::string query_bench_tsv(const QueryBenchReport& r);
std::string query_bench_json(const QueryBenchReport& r);

}  // namespace tgt
