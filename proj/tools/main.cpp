// tgt: temporal graph traversal toolkit.
//
// Exit codes: 0 success, 1 verification/property failure, 2 usage error or
// refused request, 3 input parse error, 4 domain error (bad labels, bad
// graph, infeasible parameters).

#include "tgt/bench.hpp"
#include "tgt/graph.hpp"
#include "tgt/oracle.hpp"
#include "tgt/paths.hpp"
#include "tgt/serialize.hpp"
#include "tgt/traversal.hpp"
#include "tgt/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

struct InputOpts {
  std::string path;
  bool koblenz = false;
  bool undirected = false;
  bool dedupe = false;
};

void add_input(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("-i,--input", in.path, "temporal edge list file")->required();
  cmd->add_flag("--koblenz", in.koblenz,
                "KONECT-style rows: src dst [weight] time, '%' comments allowed");
  cmd->add_flag("--undirected", in.undirected, "insert both directions of every line");
  cmd->add_flag("--dedupe", in.dedupe, "drop repeated (src,dst,t) triples instead of failing");
}

struct FormatOpts {
  bool json = false;
  bool tsv = false;
  std::string output;
};

void add_format(CLI::App* cmd, FormatOpts& f) {
  auto* j = cmd->add_flag("--json", f.json, "JSON output");
  cmd->add_flag("--tsv", f.tsv, "tab-separated output")->excludes(j);
  cmd->add_option("-o,--output", f.output, "write to file instead of stdout");
}

struct TsOpts {
  std::optional<tgt::Timestamp> ts;
  std::optional<double> frac;
};

void add_ts(CLI::App* cmd, TsOpts& t) {
  auto* a = cmd->add_option("--ts", t.ts, "start time (default 0)");
  cmd->add_option("--ts-frac", t.frac,
                  "start at this fraction of the sorted distinct timestamps")
      ->excludes(a);
}

tgt::TemporalGraph load(const InputOpts& in) {
  tgt::LoadOptions o;
  o.directed = !in.undirected;
  o.koblenz = in.koblenz;
  o.dedupe = in.dedupe;
  return tgt::load_edge_list_file(in.path, o);
}

tgt::Timestamp resolve_ts(const tgt::TemporalGraph& g, const TsOpts& t) {
  if (t.frac) return tgt::pick_ts_fraction(tgt::distinct_timestamps(g), *t.frac);
  return t.ts.value_or(0);
}

tgt::VertexId need_vertex(const tgt::TemporalGraph& g, const std::string& label) {
  if (auto v = g.vertex(label)) return *v;
  throw tgt::DomainError("unknown vertex label: " + label);
}

void emit(const FormatOpts& f, const std::string& payload) {
  if (f.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(f.output, std::ios::binary);
  if (!os) throw tgt::DomainError("cannot write output file: " + f.output);
  os << payload;
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"temporal graph traversal toolkit"};
  app.require_subcommand(1);

  // stats ------------------------------------------------------------------
  auto* stats = app.add_subcommand("stats", "degree/timestamp statistics of a graph");
  auto stats_in = std::make_shared<InputOpts>();
  auto stats_fmt = std::make_shared<FormatOpts>();
  add_input(stats, *stats_in);
  add_format(stats, *stats_fmt);
  stats->callback([=]() {
    tgt::GraphStats s = tgt::compute_stats(load(*stats_in));
    emit(*stats_fmt, stats_fmt->tsv ? tgt::stats_tsv(s) : tgt::stats_json(s));
  });

  // traverse ---------------------------------------------------------------
  auto* trav = app.add_subcommand("traverse", "run one traversal and classify every edge");
  auto trav_in = std::make_shared<InputOpts>();
  auto trav_fmt = std::make_shared<FormatOpts>();
  auto trav_ts = std::make_shared<TsOpts>();
  auto trav_kind = std::make_shared<std::string>();
  auto trav_src = std::make_shared<std::string>();
  add_input(trav, *trav_in);
  trav->add_option("--kind", *trav_kind, "dfs-v1 | dfs-v2 | bfs")
      ->required()
      ->check(CLI::IsMember({"dfs-v1", "dfs-v2", "bfs"}));
  trav->add_option("--source", *trav_src, "source vertex label")->required();
  add_ts(trav, *trav_ts);
  add_format(trav, *trav_fmt);
  trav->callback([=]() {
    tgt::TemporalGraph g = load(*trav_in);
    tgt::VertexId s = need_vertex(g, *trav_src);
    tgt::Timestamp t_s = resolve_ts(g, *trav_ts);
    tgt::TraversalResult r = *trav_kind == "dfs-v1"  ? tgt::dfs_v1(g, s, t_s)
                             : *trav_kind == "dfs-v2" ? tgt::dfs_v2(g, s, t_s)
                                                      : tgt::bfs(g, s, t_s);
    emit(*trav_fmt, trav_fmt->tsv ? tgt::traversal_tsv(g, r) : tgt::traversal_json(g, r));
  });

  // paths ------------------------------------------------------------------
  auto* paths = app.add_subcommand("paths", "single-source temporal path queries");
  auto paths_in = std::make_shared<InputOpts>();
  auto paths_fmt = std::make_shared<FormatOpts>();
  auto paths_ts = std::make_shared<TsOpts>();
  auto objective = std::make_shared<std::string>();
  auto paths_src = std::make_shared<std::string>();
  auto engine = std::make_shared<std::string>("bfs");
  auto tx = std::make_shared<std::optional<tgt::Timestamp>>();
  auto ty = std::make_shared<std::optional<tgt::Timestamp>>();
  auto at = std::make_shared<std::optional<tgt::Timestamp>>();
  add_input(paths, *paths_in);
  paths->add_option("--objective", *objective, "foremost | fastest | shortest | foremost-from")
      ->required()
      ->check(CLI::IsMember({"foremost", "fastest", "shortest", "foremost-from"}));
  paths->add_option("--source", *paths_src, "source vertex label")->required();
  add_ts(paths, *paths_ts);
  paths->add_option("--engine", *engine, "foremost engine: bfs | dfs-v1 (default bfs)")
      ->check(CLI::IsMember({"bfs", "dfs-v1"}));
  paths->add_option("--tx", *tx, "fastest: earliest departure (default t_s)");
  paths->add_option("--ty", *ty, "fastest: latest arrival (default unbounded)");
  paths->add_option("--at", *at, "foremost-from: departure bound (default t_s)");
  add_format(paths, *paths_fmt);
  paths->callback([=]() {
    tgt::TemporalGraph g = load(*paths_in);
    tgt::VertexId s = need_vertex(g, *paths_src);
    tgt::Timestamp t_s = resolve_ts(g, *paths_ts);

    tgt::PathsReport rep;
    rep.objective = *objective;
    rep.source = g.label(s);
    rep.t_s = t_s;

    if (*objective == "foremost") {
      rep.value_key = "arrival";
      tgt::ForemostPaths fp = tgt::foremost_paths(
          g, s, t_s, *engine == "bfs" ? tgt::PathEngine::BFS : tgt::PathEngine::DFS_V1);
      for (tgt::VertexId v = 0; v < g.num_vertices(); ++v)
        if (fp.has(v))
          rep.records.push_back({v, fp.arrival(v), tgt::tree_path(fp.tree, fp.best[v], g)});
    } else if (*objective == "shortest") {
      rep.value_key = "hops";
      tgt::ShortestPaths sp = tgt::shortest_paths(g, s, t_s);
      for (tgt::VertexId v = 0; v < g.num_vertices(); ++v)
        if (sp.has(v))
          rep.records.push_back({v, sp.hops(v), tgt::tree_path(sp.tree, sp.best[v], g)});
    } else {
      tgt::TraversalTree tree = tgt::traverse_tree(g, tgt::TraversalKind::DFS_V2, s, t_s);
      tgt::OccurrenceIndex idx = tgt::build_occurrence_index(tree);
      if (*objective == "fastest") {
        rep.value_key = "duration";
        tgt::Timestamp a = tx->value_or(t_s), b = ty->value_or(tgt::T_INF);
        rep.params = {{"t_x", a}, {"t_y", b}};
        tgt::FastestPaths fp = tgt::fastest_paths(idx, a, b);
        for (tgt::VertexId v = 0; v < g.num_vertices(); ++v)
          if (fp.has(v))
            rep.records.push_back({v, fp.duration[v], tgt::tree_path(tree, fp.best[v], g)});
      } else {  // foremost-from
        rep.value_key = "arrival";
        tgt::Timestamp a = at->value_or(t_s);
        rep.params = {{"t", a}};
        tgt::ForemostFrom ff = tgt::foremost_from(idx, a);
        for (tgt::VertexId v = 0; v < g.num_vertices(); ++v)
          if (ff.has(v))
            rep.records.push_back({v, ff.arrival[v], tgt::tree_path(tree, ff.best[v], g)});
      }
    }
    emit(*paths_fmt, paths_fmt->tsv ? tgt::paths_tsv(g, rep) : tgt::paths_json(g, rep));
  });

  // generate ----------------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "write a uniform random temporal graph");
  auto gen_fmt = std::make_shared<FormatOpts>();
  auto gn = std::make_shared<uint32_t>(0);
  auto gm = std::make_shared<uint64_t>(0);
  auto gt = std::make_shared<tgt::Timestamp>(100);
  auto gseed = std::make_shared<uint64_t>(1);
  gen->add_option("--n", *gn, "vertex count")->required();
  gen->add_option("--m", *gm, "edge count (distinct triples)")->required();
  gen->add_option("--t-max", *gt, "timestamps drawn from [0, t-max] (default 100)");
  gen->add_option("--seed", *gseed, "RNG seed (default 1)");
  gen->add_option("-o,--output", gen_fmt->output, "write to file instead of stdout");
  gen->callback([=]() {
    tgt::TemporalGraph g = tgt::generate_random(*gn, *gm, *gt, *gseed);
    std::ostringstream os;
    tgt::write_edge_list(g, os);
    emit(*gen_fmt, os.str());
  });

  // project -----------------------------------------------------------------
  auto* proj = app.add_subcommand("project", "write the static projection (distinct pairs)");
  auto proj_in = std::make_shared<InputOpts>();
  auto proj_fmt = std::make_shared<FormatOpts>();
  add_input(proj, *proj_in);
  proj->add_option("-o,--output", proj_fmt->output, "write to file instead of stdout");
  proj->callback([=]() {
    tgt::TemporalGraph g = load(*proj_in);
    tgt::StaticGraph sg = tgt::project_static(g);
    std::ostringstream os;
    for (tgt::VertexId u = 0; u < sg.num_vertices(); ++u)
      for (uint32_t k = sg.offsets[u]; k < sg.offsets[u + 1]; ++k)
        os << g.label(u) << " " << g.label(sg.nbr[k]) << "\n";
    emit(*proj_fmt, os.str());
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "randomized checks against reference replays");
  auto vopts = std::make_shared<tgt::VerifyOptions>();
  auto vmut = std::make_shared<std::string>("none");
  auto vnoshrink = std::make_shared<bool>(false);
  auto vprogress = std::make_shared<bool>(false);
  verify->add_option("--instances", vopts->instances, "random graphs to test (default 200)");
  verify->add_option("--max-n", vopts->max_n, "max vertices (default 12)");
  verify->add_option("--max-m", vopts->max_m, "max edges (default 40)");
  verify->add_option("--max-t", vopts->max_t, "max timestamp (default 30)");
  verify->add_option("--seed", vopts->seed, "RNG seed (default 2026)");
  verify->add_option("--mutate", *vmut, "sabotage a reference: none | dfs-v1-pick-latest")
      ->check(CLI::IsMember({"none", "dfs-v1-pick-latest"}));
  verify->add_flag("--no-shrink", *vnoshrink, "report the failing instance unshrunk");
  verify->add_flag("--progress", *vprogress, "progress lines on stderr");
  verify->callback([=]() {
    tgt::VerifyOptions o = *vopts;
    o.mutate = *vmut == "none" ? tgt::Mutation::None : tgt::Mutation::DfsV1PickLatest;
    o.shrink = !*vnoshrink;
    tgt::VerifySummary sum = tgt::run_verification(o, *vprogress ? &std::cerr : nullptr);
    if (sum.violation) {
      std::cerr << sum.violation->dump();
      g_exit = 1;
      return;
    }
    std::cout << "verified " << sum.instances_run << " instances (" << sum.cases_run
              << " source/start cases), no violations\n";
  });

  // bench -------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "traversal and query measurements");
  auto bench_in = std::make_shared<InputOpts>();
  auto bench_fmt = std::make_shared<FormatOpts>();
  auto bopts = std::make_shared<tgt::BenchOptions>();
  auto bmode = std::make_shared<std::string>("traversal");
  auto bts = std::make_shared<tgt::Timestamp>(0);
  auto bnotime = std::make_shared<bool>(false);
  add_input(bench, *bench_in);
  bench->add_option("--mode", *bmode, "traversal | queries (default traversal)")
      ->check(CLI::IsMember({"traversal", "queries"}));
  bench->add_option("--sources", bopts->num_sources, "sources per cohort (default 20)");
  bench->add_option("--seed", bopts->seed, "source sampling seed (default 42)");
  bench->add_option("--ts-fracs", bopts->ts_fracs,
                    "start-time fractions (default 0 0.25 0.5 0.75)");
  bench->add_option("--ts", *bts, "start time for queries mode (default 0)");
  bench->add_flag("--no-time", *bnotime, "suppress timings for byte-stable output");
  add_format(bench, *bench_fmt);
  bench->callback([=]() {
    tgt::TemporalGraph g = load(*bench_in);
    if (*bmode == "traversal") {
      tgt::BenchOptions o = *bopts;
      o.with_timings = !*bnotime;
      tgt::BenchReport rep = tgt::run_bench(g, o);
      emit(*bench_fmt, bench_fmt->json ? tgt::bench_json(rep) : tgt::bench_tsv(rep));
    } else {
      tgt::QueryBenchReport rep = tgt::run_query_bench(g, bopts->num_sources, bopts->seed, *bts);
      emit(*bench_fmt, bench_fmt->json ? tgt::query_bench_json(rep) : tgt::query_bench_tsv(rep));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tgt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const tgt::GuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const tgt::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
