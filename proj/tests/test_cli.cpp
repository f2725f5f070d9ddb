// Drives the built binary end to end: exit codes, file outputs, report
// determinism. The binary path arrives via the TW2_CLI environment variable.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tw2/graph.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("TW2_CLI");
  return p ? p : "";
}

int run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tw2_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli: gen, embed, check, recognize, diam, suite") {
  if (cli_path().empty()) {
    MESSAGE("TW2_CLI not set; skipping");
    return;
  }
  TempDir tmp;
  const std::string c5 = tmp.file("c5.txt");
  const std::string h = tmp.file("h.txt");
  const std::string trace = tmp.file("trace.json");
  const std::string k23 = tmp.file("k23.txt");

  CHECK(run("gen --family cycle --n 5 --out " + c5) == 0);
  tw2::Graph g = tw2::read_graph_file(c5);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);

  CHECK(run("embed --in " + c5 + " --root 0 --out " + h + " --trace " + trace) == 0);
  CHECK(tw2::read_graph_file(h) == g);  // the five-cycle embeds to itself
  auto jt = nlohmann::json::parse(slurp(trace));
  CHECK(jt["clusters"].size() == 3);

  CHECK(run("check --in " + c5 + " --root 0 --deterministic-report") == 0);
  CHECK(run("check --in " + c5 + " --sweep-roots --deterministic-report") == 0);

  CHECK(run("gen --family k23 --out " + k23) == 0);
  CHECK(run("recognize --in " + k23) == 4);  // not-free
  CHECK(run("check --in " + k23 + " --root 0") == 3);  // oversized parent set

  CHECK(run("diam --in " + c5 + " --exact") == 0);

  const std::string report_a = tmp.file("a.json");
  const std::string report_b = tmp.file("b.json");
  std::string suite_args = "suite --family outerplanar --n 24 --count 4 --seed 3 "
                           "--deterministic-report --report ";
  CHECK(run(suite_args + report_a) == 0);
  CHECK(run(suite_args + report_b) == 0);
  CHECK(slurp(report_a) == slurp(report_b));  // byte-identical facts

  CHECK(run("embed --in " + tmp.file("missing.txt")) == 1);

  const std::string bad = tmp.file("bad.txt");
  std::ofstream(bad) << "3\n0 1\n0 1\n";
  CHECK(run("embed --in " + bad) == 2);  // parse error

  const std::string split = tmp.file("split.txt");
  std::ofstream(split) << "4\n0 1\n2 3\n";
  CHECK(run("embed --in " + split) == 3);  // disconnected

  // a starved budget leaves the wheel search inconclusive
  CHECK(run("check --in " + c5 + " --budget 1") == 5);

  const std::string csv = tmp.file("bench.csv");
  const std::string bench_report = tmp.file("bench.json");
  CHECK(run("bench --family tree --sizes 200 400 800 --fast --out " + csv +
            " --report " + bench_report) == 0);
  CHECK(slurp(csv).starts_with("phase,n,m,millis\n"));
  auto jb = nlohmann::json::parse(slurp(bench_report));
  CHECK(jb["fit"].contains("embed"));
  CHECK(jb["rows"].size() == 12);  // four phases, three sizes
}
