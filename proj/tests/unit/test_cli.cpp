#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kr/cli.hpp"
#include "kr/graph_io.hpp"

using namespace kr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  Run six = run({"enumerate", "--algebra", "E6", "--node", "1", "--level", "1"});
  CHECK(six.code == kExitOk);
  CHECK(six.out.find("elements 27\n") != std::string::npos);
  Run seven = run({"enumerate", "--algebra", "E7", "--node", "7", "--level", "1"});
  CHECK(seven.code == kExitOk);
  CHECK(seven.out.find("elements 56\n") != std::string::npos);
  Run bad = run({"enumerate", "--algebra", "E6", "--node", "2", "--level", "1"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("node 2") != std::string::npos);
  Run json = run({"enumerate", "--algebra", "E6", "--format", "json"});
  CHECK(parse_graph_json(json.out).elements.size() == 27);
}

TEST_CASE("graph output is deterministic and round trips") {
  Run a = run({"graph", "--algebra", "E6", "--level", "2", "--format", "json"});
  Run b = run({"graph", "--algebra", "E6", "--level", "2", "--format", "json"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(to_json(parse_graph_json(a.out)) == a.out);
  Run dot = run({"graph", "--algebra", "E6"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  CHECK(run({"graph", "--algebra", "E6", "--format", "svg"}).code == kExitUsage);
}

TEST_CASE("verify") {
  for (auto [algebra, node] : {std::pair{"E6", "1"}, std::pair{"E6", "6"}, std::pair{"E7", "7"}}) {
    Run r = run({"verify", "--algebra", algebra, "--node", node, "--level", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PERFECT") != std::string::npos);
  }
  CHECK(run({"verify", "--algebra", "E6", "--node", "1", "--level", "2"}).code == kExitOk);
  Run json = run({"verify", "--algebra", "E7", "--format", "json", "--checks", "p3,p4"});
  CHECK(json.code == kExitOk);
  CHECK(json.out.find("\"perfect\": true") != std::string::npos);
  Run scale = run({"verify", "--algebra", "E7", "--level", "1", "--budget", "10"});
  CHECK(scale.code == kExitScaleExceeded);
}

TEST_CASE("verify writes the json report with --out") {
  std::string path = "cli_test_report.json";
  Run r = run({"verify", "--algebra", "E6", "--out", path});
  CHECK(r.code == kExitOk);
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str().find("\"schema_version\": 1") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("budget from the environment") {
  setenv("KR_BUDGET", "10", 1);
  CHECK(run({"enumerate", "--algebra", "E7"}).code == kExitScaleExceeded);
  CHECK(run({"enumerate", "--algebra", "E7", "--budget", "100"}).code == kExitOk);
  setenv("KR_BUDGET", "lots", 1);
  CHECK(run({"enumerate", "--algebra", "E7"}).code == kExitUsage);
  unsetenv("KR_BUDGET");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"enumerate"}).code == kExitUsage);
  CHECK(run({"enumerate", "--algebra", "E8"}).code == kExitUsage);
  CHECK(run({"enumerate", "--algebra", "E6", "--level", "0"}).code == kExitUsage);
  CHECK(run({"enumerate", "--algebra", "E6", "--level", "x"}).code == kExitUsage);
  CHECK(run({"verify", "--algebra", "E6", "--checks", "p9"}).code == kExitUsage);
  CHECK(run({"verify", "--algebra", "E6", "--budget", "0"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("tables") {
  Run all = run({"tables"});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("PASS E6 r=1 trail masks give the x_l forms") != std::string::npos);
  Run e7 = run({"tables", "--algebra", "E7"});
  int sigma_lines = 0;
  std::istringstream lines(e7.out);
  for (std::string line; std::getline(lines, line);)
    if (line.find("PASS E7 r=7 sigma_") == 0) ++sigma_lines;
  CHECK(sigma_lines == 6);
  Run dump = run({"tables", "--emit", "json"});
  CHECK(dump.code == kExitOk);
  CHECK(dump.out.find("\"masks\"") != std::string::npos);
  CHECK(run({"tables", "--emit", "yaml"}).code == kExitUsage);
}
