// End-to-end checks of the command-line surface; every case shells out to
// the real binary (path injected by the build).

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "harp/embedding.hpp"
#include "harp/graph_io.hpp"

#ifndef HARP_CLI_PATH
#error "HARP_CLI_PATH must be defined"
#endif

using namespace harp;
namespace fs = std::filesystem;

namespace {

const std::string cli = HARP_CLI_PATH;

int run(const std::string& args) {
  return std::system((cli + " " + args + " > cli_stdout.txt 2> cli_stderr.txt").c_str());
}

int exit_code(int system_status) {
#ifdef WEXITSTATUS
  return WEXITSTATUS(system_status);
#else
  return system_status;
#endif
}

std::string slurp(const std::string& path) { return read_file(path); }

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::path("cli_work") / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

}  // namespace

TEST_CASE("cli: generate writes a loadable edge list") {
  TempDir dir("generate");
  REQUIRE(exit_code(run("generate --model er --nodes 200 --avg-degree 8 --seed 3 --output " +
                        (dir / "er.edgelist"))) == 0);
  auto loaded = load_edge_list(dir / "er.edgelist");
  CHECK(loaded.graph.node_count() <= 200);  // isolated nodes don't appear in an edge list
  CHECK(loaded.graph.node_count() >= 195);
  CHECK(loaded.graph.edge_count() > 600);
}

TEST_CASE("cli: coarsen emits hierarchy files and a ratio csv") {
  TempDir dir("coarsen");
  REQUIRE(exit_code(run("generate --model ba --nodes 400 --m 4 --seed 4 --output " +
                        (dir / "g.edgelist"))) == 0);
  REQUIRE(exit_code(run("coarsen --input " + (dir / "g.edgelist") + " --threshold 60 --seed 5" +
                        " --out-dir " + (dir / "hier") + " --stats-csv " + (dir / "stats.csv"))) == 0);
  CHECK(fs::exists(dir / "hier/level_0.edgelist"));
  CHECK(fs::exists(dir / "hier/parents_0.tsv"));
  const std::string stats = slurp(dir / "stats.csv");
  CHECK(stats.rfind("level,nodes,edges,node_ratio,edge_ratio", 0) == 0);
  // level-0 ratios are exactly 1,1 and both ratios never increase
  std::istringstream lines(stats);
  std::string line;
  std::getline(lines, line);
  double prev_nr = 2.0, prev_er = 2.0;
  std::size_t level = 0;
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    std::size_t lvl, nodes, edges;
    double nr, er;
    REQUIRE((row >> lvl >> nodes >> edges >> nr >> er));
    CHECK(lvl == level++);
    if (lvl == 0) {
      CHECK(nr == 1.0);
      CHECK(er == 1.0);
    }
    CHECK(nr <= prev_nr);
    CHECK(er <= prev_er);
    prev_nr = nr;
    prev_er = er;
  }
  CHECK(level >= 2);
}

TEST_CASE("cli: embed + eval + manifest replay") {
  TempDir dir("embed");
  REQUIRE(exit_code(run("generate --model planted --nodes 300 --communities 3 --avg-degree 8"
                        " --mixing 0.15 --seed 6 --output " + (dir / "g.edgelist") +
                        " --labels-output " + (dir / "g.labels"))) == 0);

  // multilevel embedding with inline evaluation
  REQUIRE(exit_code(run("embed --input " + (dir / "g.edgelist") +
                        " --method line --dim 8 --iterations 10 --threshold 50 --seed 7" +
                        " --output " + (dir / "emb.txt") + " --labels " + (dir / "g.labels") +
                        " --ratios 0.1 --reps 3 --eval-out " + (dir / "eval.csv"))) == 0);

  auto emb = load_embedding(dir / "emb.txt");
  CHECK(emb.matrix.rows() == 300);
  CHECK(emb.matrix.dim() == 8);

  const std::string eval_csv = slurp(dir / "eval.csv");
  CHECK(eval_csv.rfind("method,ratio,rep,macro_f1", 0) == 0);
  CHECK(std::count(eval_csv.begin(), eval_csv.end(), '\n') == 4);  // header + 3 reps

  // manifest replay reproduces the embedding byte for byte
  CHECK(fs::exists(dir / "emb.txt.manifest.json"));
  REQUIRE(exit_code(run("embed --from-manifest " + (dir / "emb.txt.manifest.json") +
                        " --output " + (dir / "emb2.txt"))) == 0);
  CHECK(slurp(dir / "emb.txt") == slurp(dir / "emb2.txt"));

  // baseline mode consumes the budget-matched sample count
  REQUIRE(exit_code(run("embed --input " + (dir / "g.edgelist") +
                        " --method line --dim 8 --iterations 10 --threshold 50 --seed 7" +
                        " --mode baseline --output " + (dir / "flat.txt"))) == 0);
  CHECK(load_embedding(dir / "flat.txt").matrix.rows() == 300);
}

TEST_CASE("cli: eval on a stored embedding") {
  TempDir dir("eval");
  REQUIRE(exit_code(run("generate --model planted --nodes 200 --communities 2 --avg-degree 8"
                        " --mixing 0.1 --seed 8 --output " + (dir / "g.edgelist") +
                        " --labels-output " + (dir / "g.labels"))) == 0);
  REQUIRE(exit_code(run("embed --input " + (dir / "g.edgelist") +
                        " --method deepwalk --dim 8 --walks 3 --walk-length 5 --window 2" +
                        " --seed 9 --output " + (dir / "emb.txt"))) == 0);
  REQUIRE(exit_code(run("eval --embedding " + (dir / "emb.txt") + " --labels " + (dir / "g.labels") +
                        " --ratios 0.1,0.2 --reps 2 --seed 10 --out " + (dir / "report.csv"))) == 0);
  const std::string report = slurp(dir / "report.csv");
  CHECK(std::count(report.begin(), report.end(), '\n') == 5);  // header + 2 ratios x 2 reps
}

TEST_CASE("cli: compare writes table and curve csvs") {
  TempDir dir("compare");
  REQUIRE(exit_code(run("generate --model planted --nodes 250 --communities 3 --avg-degree 8"
                        " --mixing 0.15 --seed 11 --output " + (dir / "g.edgelist") +
                        " --labels-output " + (dir / "g.labels"))) == 0);
  REQUIRE(exit_code(run("compare --input " + (dir / "g.edgelist") + " --labels " + (dir / "g.labels") +
                        " --methods line --ratios 0.1 --reps 3 --dim 8 --iterations 10" +
                        " --threshold 50 --seed 12 --out " + (dir / "table.csv") +
                        " --curve-out " + (dir / "curve.csv"))) == 0);
  const std::string table = slurp(dir / "table.csv");
  CHECK(table.rfind("method,ratio,baseline_mean,harp_mean,gain_percent,p_value", 0) == 0);
  const std::string curve = slurp(dir / "curve.csv");
  CHECK(curve.find("line,baseline,") != std::string::npos);
  CHECK(curve.find("line,harp,") != std::string::npos);
}

TEST_CASE("cli: bench emits one record per mode and size") {
  TempDir dir("bench");
  REQUIRE(exit_code(run("bench --node-counts 100,200 --avg-degree 6 --method line --dim 4"
                        " --iterations 2 --seed 13 --out " + (dir / "bench.csv"))) == 0);
  const std::string csv = slurp(dir / "bench.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 2 sizes x 2 modes
  CHECK(csv.find(",harp,") != std::string::npos);
  CHECK(csv.find(",baseline,") != std::string::npos);
}

TEST_CASE("cli: dump-levels produces coords and svg per level") {
  TempDir dir("dump");
  REQUIRE(exit_code(run("generate --model ring --nodes 150 --k 2 --output " + (dir / "g.edgelist"))) == 0);
  REQUIRE(exit_code(run("dump-levels --input " + (dir / "g.edgelist") +
                        " --method line --iterations 4 --threshold 30 --seed 14 --out-dir " +
                        (dir / "levels"))) == 0);
  CHECK(fs::exists(dir / "levels/level_0.coords"));
  CHECK(fs::exists(dir / "levels/level_0.svg"));
  CHECK(fs::exists(dir / "levels/level_1.coords"));
}

TEST_CASE("cli: errors exit nonzero with a one-line message") {
  TempDir dir("errors");
  {
    std::ofstream bad(dir / "bad.edgelist");
    bad << "a b c d\n";
  }
  int status = run("embed --input " + (dir / "bad.edgelist") + " --method line --output " +
                   (dir / "out.txt"));
  CHECK(exit_code(status) == 1);
  const std::string err = slurp("cli_stderr.txt");
  CHECK(err.rfind("error: ", 0) == 0);
  CHECK(std::count(err.begin(), err.end(), '\n') == 1);

  CHECK(exit_code(run("eval --embedding does_not_exist.txt --labels nope.txt")) == 1);
}

TEST_CASE("cli: HARP_SEED env var is the seed fallback") {
  TempDir dir("envseed");
  const std::string gen_args = "generate --model er --nodes 120 --avg-degree 6 --output ";
  REQUIRE(exit_code(std::system(("HARP_SEED=99 " + cli + " " + gen_args + (dir / "a.edgelist") +
                                 " > /dev/null 2>&1").c_str())) == 0);
  REQUIRE(exit_code(std::system(("HARP_SEED=99 " + cli + " " + gen_args + (dir / "b.edgelist") +
                                 " > /dev/null 2>&1").c_str())) == 0);
  REQUIRE(exit_code(std::system(("HARP_SEED=100 " + cli + " " + gen_args + (dir / "c.edgelist") +
                                 " > /dev/null 2>&1").c_str())) == 0);
  CHECK(slurp(dir / "a.edgelist") == slurp(dir / "b.edgelist"));
  CHECK(slurp(dir / "a.edgelist") != slurp(dir / "c.edgelist"));
}
