// End-to-end tests of the command line tool: every subcommand, the output
// formats, and the exit code contract.
#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code;
  std::string out;  // stdout + stderr
};

fs::path temp_file(const std::string& tag) {
  static int counter = 0;
  return fs::temp_directory_path() / ("tgt_cli_" + tag + "_" + std::to_string(counter++) + ".tmp");
}

RunResult run(const std::string& args) {
  fs::path outp = temp_file("out");
  std::string cmd = std::string(TGT_CLI_PATH) + " " + args + " >" + outp.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
#ifdef _WIN32
  int code = rc;
#else
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#endif
  std::ifstream f(outp);
  std::stringstream ss;
  ss << f.rdbuf();
  fs::remove(outp);
  return {code, ss.str()};
}

std::string g1() { return std::string(TGT_DATA_DIR) + "/g1.tel"; }

const json* find_record(const json& results, const std::string& vertex) {
  for (const auto& r : results)
    if (r.at("vertex") == vertex) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("cli: stats emits the fixed key set") {
  RunResult r = run("stats -i " + g1());
  REQUIRE(r.code == 0);
  json s = json::parse(r.out);
  CHECK(s.size() == 10);
  CHECK(s.at("n") == 6);
  CHECK(s.at("m") == 12);
  CHECK(s.at("static_edges") == 9);
  CHECK(s.at("d_avg_temporal") == doctest::Approx(2.0));
  CHECK(s.at("d_max_temporal") == 4);
  CHECK(s.at("d_avg_static") == doctest::Approx(1.5));
  CHECK(s.at("d_max_static") == 3);
  CHECK(s.at("d_avg_pair") == doctest::Approx(12.0 / 9.0));
  CHECK(s.at("d_max_pair") == 2);
  CHECK(s.at("snapshots") == 9);

  RunResult tsv = run("stats -i " + g1() + " --tsv");
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.find("n\t6") != std::string::npos);
}

TEST_CASE("cli: traverse reports the classification census") {
  RunResult r = run("traverse -i " + g1() + " --kind dfs-v1 --source a --ts 2");
  REQUIRE(r.code == 0);
  json t = json::parse(r.out);
  CHECK(t.at("schema") == "traversal/1");
  CHECK(t.at("kind") == "dfs-v1");
  CHECK(t.at("source") == "a");
  CHECK(t.at("t_s") == 2);
  CHECK(t.at("occurrences").size() == 6);
  CHECK(t.at("log").size() == 9);
  CHECK(t.at("label_counts").at("tree") == 5);
  CHECK(t.at("label_counts").at("forward") == 1);
  CHECK(t.at("label_counts").at("backward") == 2);
  CHECK(t.at("label_counts").at("cross") == 1);
  CHECK(t.at("label_counts").at("non_traversed") == 3);
  CHECK(t.at("cycles").size() == 2);
  CHECK(t.at("reached") == json({"a", "b", "c", "f", "g"}));

  RunResult b = run("traverse -i " + g1() + " --kind bfs --source a --ts 2");
  REQUIRE(b.code == 0);
  json bt = json::parse(b.out);
  CHECK(bt.at("label_counts").at("tree") == 4);
  CHECK(bt.at("label_counts").at("non_tree") == 5);
  CHECK(bt.at("label_counts").at("non_traversed") == 3);
  CHECK_FALSE(bt.contains("cycles"));

  RunResult tsv = run("traverse -i " + g1() + " --kind dfs-v2 --source a --ts 2 --tsv");
  REQUIRE(tsv.code == 0);
  CHECK(tsv.out.rfind("src\tdst\tt\tlabel\n", 0) == 0);
  CHECK(tsv.out.find("a\tf\t7\ttree") != std::string::npos);
}

TEST_CASE("cli: path queries") {
  RunResult r = run("paths -i " + g1() + " --objective fastest --source a --ts 2");
  REQUIRE(r.code == 0);
  json p = json::parse(r.out);
  CHECK(p.at("schema") == "paths/1");
  CHECK(p.at("objective") == "fastest");
  CHECK(p.at("params").at("t_x") == 2);
  CHECK(p.at("params").at("t_y").is_null());
  const json* c = find_record(p.at("results"), "c");
  REQUIRE(c != nullptr);
  CHECK(c->at("duration") == 1);
  CHECK(c->at("hops") == 2);
  const json* a = find_record(p.at("results"), "a");
  REQUIRE(a != nullptr);
  CHECK(a->at("duration") == 0);
  CHECK(a->at("path").empty());
  CHECK(find_record(p.at("results"), "h") == nullptr);

  RunResult fm = run("paths -i " + g1() + " --objective foremost --source a --ts 2");
  json fj = json::parse(fm.out);
  CHECK(find_record(fj.at("results"), "c")->at("arrival") == 5);
  CHECK(find_record(fj.at("results"), "g")->at("arrival") == 8);

  RunResult ff = run("paths -i " + g1() + " --objective foremost-from --source a --ts 2 --at 7");
  json ffj = json::parse(ff.out);
  CHECK(ffj.at("params").at("t") == 7);
  CHECK(find_record(ffj.at("results"), "f")->at("arrival") == 7);
  CHECK(find_record(ffj.at("results"), "c") == nullptr);

  RunResult sh = run("paths -i " + g1() + " --objective shortest --source a --ts 2 --tsv");
  REQUIRE(sh.code == 0);
  CHECK(sh.out.rfind("vertex\thops\tpath\n", 0) == 0);
  CHECK(sh.out.find("\nc\t2\t") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(run("stats -i /nonexistent/file.tel").code == 3);    // unreadable input
  CHECK(run("frobnicate").code == 2);                        // unknown subcommand
  CHECK(run("traverse -i " + g1() + " --kind bfs --source zz").code == 4);  // unknown label
  CHECK(run("traverse -i " + g1() + " --kind bfs --source a --ts 1 --ts-frac 0.5").code == 2);
  CHECK(run("paths -i " + g1() + " --objective fastest --source a --ts 2 --tx 5 --ty 4").code == 2);
  CHECK(run("paths -i " + g1() + " --objective fastest --source a --ts 2 --tx 0").code == 2);
  CHECK(run("generate --n 3 --m 100 --t-max 1").code == 4);  // over pair/timestamp capacity
}

TEST_CASE("cli: generate feeds the other subcommands") {
  fs::path gpath = temp_file("gen");
  REQUIRE(run("generate --n 20 --m 60 --seed 5 --t-max 50 -o " + gpath.string()).code == 0);
  RunResult s = run("stats -i " + gpath.string());
  REQUIRE(s.code == 0);
  json stats = json::parse(s.out);
  CHECK(stats.at("m") == 60);
  CHECK(stats.at("n") <= 20);  // isolated vertices don't survive the edge-list round trip

  RunResult t = run("traverse -i " + gpath.string() + " --kind dfs-v2 --source 0");
  CHECK(t.code == 0);
  fs::remove(gpath);
}

TEST_CASE("cli: project lists each static edge once") {
  RunResult r = run("project -i " + g1());
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  std::string line;
  int lines = 0;
  bool saw_fh = false;
  while (std::getline(is, line)) {
    ++lines;
    if (line == "f h") saw_fh = true;
  }
  CHECK(lines == 9);
  CHECK(saw_fh);
}

TEST_CASE("cli: verify exit codes for clean and sabotaged runs") {
  RunResult ok = run("verify --instances 5 --seed 3");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("no violations") != std::string::npos);

  RunResult bad = run("verify --instances 200 --seed 11 --mutate dfs-v1-pick-latest");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("dfs_v1_matches_reference") != std::string::npos);
}

TEST_CASE("cli: bench output is byte-stable without timings") {
  fs::path gpath = temp_file("bench");
  REQUIRE(run("generate --n 50 --m 200 --seed 3 --t-max 100 -o " + gpath.string()).code == 0);
  std::string cmd = "bench -i " + gpath.string() + " --sources 5 --seed 9 --no-time";
  RunResult one = run(cmd);
  RunResult two = run(cmd);
  REQUIRE(one.code == 0);
  CHECK(one.out == two.out);
  CHECK(one.out.rfind("# bench/1", 0) == 0);

  RunResult q = run("bench -i " + gpath.string() + " --mode queries --sources 3 --seed 9");
  REQUIRE(q.code == 0);
  CHECK(q.out.rfind("# qbench/1", 0) == 0);
  fs::remove(gpath);
}
