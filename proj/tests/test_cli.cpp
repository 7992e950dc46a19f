#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kmetric/cli.hpp"
#include "util.hpp"

using namespace kmetric;

namespace {

struct CliResult {
  int rc = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.rc = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze reports the headline quantities") {
  CliResult r = run({"analyze", "W9"});
  CHECK(r.rc == kExitOk);
  CHECK(contains(r.out, "order: 10"));
  CHECK(contains(r.out, "dimensional k: 4"));
  CliResult p4 = run({"analyze", "P4"});
  CHECK(contains(p4.out, "dimensional k: 3"));
}

TEST_CASE("analyze json schema") {
  CliResult r = run({"analyze", "K5", "--format", "json"});
  REQUIRE(r.rc == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 5);
  CHECK(j["size"] == 10);
  CHECK(j["diameter"] == 1);
  CHECK(j["girth"] == 3);
  CHECK(j["dimensional_k"] == 2);
  CHECK(j["twin_pairs"].size() == 10);
  CHECK(j["connected"] == true);

  auto tree = nlohmann::json::parse(run({"analyze", "S6", "--format", "json"}).out);
  CHECK(tree["girth"].is_null());  // acyclic
}

TEST_CASE("analyze tolerates disconnected input with a warning") {
  std::string name = "kmetric_cli_disc.txt";
  {
    std::ofstream f(name);
    f << "4 2\n0 1\n2 3\n";
  }
  CliResult r = run({"analyze", "@" + name});
  CHECK(r.rc == kExitOk);
  CHECK(contains(r.err, "disconnected"));
  CHECK(contains(r.out, "connected: no"));
  CHECK(contains(r.out, "dimensional k: -"));
  CHECK(contains(r.out, "twins: (0,1) (2,3)"));
  std::remove(name.c_str());
}

TEST_CASE("analyze on the single-vertex graph leaves pair stats empty") {
  CliResult r = run({"analyze", "P1", "--format", "json"});
  REQUIRE(r.rc == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 1);
  CHECK(j["dimensional_k"].is_null());
}

TEST_CASE("dimk sweeps k up to the dimensional k by default") {
  CliResult r = run({"dimk", "F10", "--format", "json"});
  CHECK(r.rc == kExitOk);
  // F10 has dimensional k 3; expect exactly the three closed-form values
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["dim"] == 4);
  CHECK(j["rows"][1]["dim"] == 6);
  CHECK(j["rows"][2]["dim"] == 9);

  CliResult csv = run({"dimk", "F10", "--k", "1..3", "--format", "csv"});
  CHECK(contains(csv.out, "k,dim,nodes,proof\n"));
  CHECK(contains(csv.out, "1,4,"));
  CHECK(contains(csv.out, "2,6,"));
  CHECK(contains(csv.out, "3,9,"));
}

TEST_CASE("dimk json carries per-k results") {
  CliResult r = run({"dimk", "corona(P2;P4,P4)", "--k", "3", "--format", "json"});
  REQUIRE(r.rc == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["k"] == 3);
  CHECK(j["rows"][0]["dim"] == 8);
  CHECK(j["rows"][0]["proof"] == "exact");
}

TEST_CASE("basis prints witnesses and honors --all and --audit") {
  CliResult r = run({"basis", "P3"});
  CHECK(r.rc == kExitOk);
  CHECK(contains(r.out, "dim: 1"));
  CHECK(contains(r.out, "basis: 0"));

  CliResult all = run({"basis", "P3", "--all", "5"});
  CHECK(contains(all.out, "bases (up to 5):"));
  CHECK(contains(all.out, "\n  0\n"));
  CHECK(contains(all.out, "\n  2\n"));

  CliResult rim = run({"basis", "W7", "--k", "4"});
  CHECK(contains(rim.out, "1 2 3 4 5 6 7"));
  CHECK(contains(rim.out, "u1"));  // wheel labels are printed

  CliResult audit = run({"basis", "P4", "--k", "2", "--audit"});
  CHECK(contains(audit.out, "pair"));
  CHECK(contains(audit.out, "(0,2)"));

  CliResult audit_csv = run({"basis", "P4", "--audit", "--format", "csv"});
  CHECK(audit_csv.rc == kExitUsage);
}

TEST_CASE("basis leaves the base copy untouched when the attachments suffice") {
  CliResult r =
      run({"basis", "corona(P2;K2,K2)", "--k", "2", "--format", "json"});
  REQUIRE(r.rc == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["basis"].size() == 4);
  for (const auto& v : j["basis"]) CHECK(int(v) >= 2);
}

TEST_CASE("exit codes distinguish failure classes") {
  CHECK(run({"dimk", "Px"}).rc == kExitUsage);
  CHECK(run({"dimk", "P(4"}).rc == kExitUsage);
  CHECK(run({"analyze"}).rc == kExitUsage);
  CHECK(run({"dimk", "P4", "--k", "9"}).rc == kExitInfeasible);
  CHECK(run({"dimk", "P4", "--k", "0"}).rc == kExitUsage);
  CHECK(run({"dimk", "W9", "--k", "2", "--budget", "1"}).rc == kExitExhausted);
  CHECK(run({"nope"}).rc == kExitUsage);
  CHECK(run({"dimk", "P4", "--k", "2..1"}).rc == kExitUsage);
  CliResult unknown = run({"sweep", "NoSuchTheorem"});
  CHECK(unknown.rc == kExitUsage);
  CHECK(contains(unknown.err, "FanDim1"));
  CHECK(contains(unknown.err, "CoronaCyclesClosed"));
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).rc == kExitOk);
  CHECK(run({"dimk", "--help"}).rc == kExitOk);
}

TEST_CASE("node budget env var applies when no flag is given") {
  REQUIRE(setenv("KMETRIC_NODE_BUDGET", "1", 1) == 0);
  CHECK(run({"dimk", "W9", "--k", "2"}).rc == kExitExhausted);
  // explicit flag wins over the environment
  CHECK(run({"dimk", "W9", "--k", "2", "--budget", "100000"}).rc == kExitOk);
  unsetenv("KMETRIC_NODE_BUDGET");
  CHECK(run({"dimk", "W9", "--k", "2"}).rc == kExitOk);
}

TEST_CASE("sweep covers closed forms and corona statements") {
  CliResult r = run({"sweep", "FanDim2", "--n", "6..14"});
  CHECK(r.rc == kExitOk);
  CHECK(contains(r.out, "9 rows: 9 confirmed"));

  CliResult s = run({"sweep", "SandwichBounds", "--base", "P2", "--attach",
                     "P4,P4", "--k", "1..3"});
  CHECK(s.rc == kExitOk);
  CHECK(contains(s.out, "BoundHeld"));
  CHECK(contains(s.out, "Confirmed"));

  CliResult t =
      run({"sweep", "TwinDim2Equality", "--base", "P3", "--attach", "K2,K3,K2"});
  CHECK(t.rc == kExitOk);
  CHECK(contains(t.out, "Confirmed"));
  CHECK(contains(t.out, "7"));

  // joined-family statement needs --attach; plain families need no --base
  CHECK(run({"sweep", "JoinDimensionalK"}).rc == kExitUsage);
  CliResult j = run({"sweep", "JoinDimensionalK", "--attach", "C7,petersen"});
  CHECK(j.rc == kExitOk);
  CHECK(contains(j.out, "2 rows: 2 confirmed"));
}

TEST_CASE("sweep --random generates reproducible corona instances") {
  CliResult a = run({"sweep", "SandwichBounds", "--random", "4", "--seed", "9"});
  CliResult b = run({"sweep", "SandwichBounds", "--random", "4", "--seed", "9"});
  CHECK(a.rc == kExitOk);
  CHECK(a.out == b.out);
  CliResult c = run({"sweep", "SandwichBounds", "--random", "4", "--seed", "10"});
  CHECK(c.out != a.out);
  CHECK(contains(a.out, "random#0"));
}

TEST_CASE("verify runs the curated corpus") {
  CliResult r = run({"verify", "--only", "FanDim1"});
  CHECK(r.rc == kExitOk);
  CHECK(contains(r.out, "FanDim1"));
  CHECK(contains(r.out, "total: 14 rows: 14 confirmed"));

  CliResult j = run({"verify", "--only", "WheelDim4", "--format", "json"});
  REQUIRE(j.rc == kExitOk);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["violations"] == 0);
  CHECK(parsed["reports"].is_array());
  for (const auto& rep : parsed["reports"]) CHECK(rep["theorem"] == "WheelDim4");
}

TEST_CASE("json and csv outputs are byte-stable across runs") {
  for (auto args : {std::vector<std::string>{"analyze", "W9", "--format", "json"},
                    {"dimk", "F9", "--k", "1..3", "--format", "csv"},
                    {"basis", "C7", "--k", "2", "--format", "json"},
                    {"sweep", "WheelDim3", "--n", "7..10", "--format", "csv"},
                    {"verify", "--only", "Girth5Regular2Delta", "--format",
                     "json"}}) {
    CAPTURE(args[0]);
    CliResult first = run(args);
    CliResult second = run(args);
    CHECK(first.rc == kExitOk);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("edge-list files work through the @ prefix") {
  std::string name = "kmetric_cli_p4.txt";
  {
    std::ofstream f(name);
    f << "# four in a row\n4 3\n0 1\n1 2\n2 3\n";
  }
  CliResult file_run =
      run({"dimk", "@" + name, "--k", "1..3", "--format", "json"});
  CliResult expr_run = run({"dimk", "P4", "--k", "1..3", "--format", "json"});
  CHECK(file_run.rc == kExitOk);
  // identical numbers; only the echoed expression differs
  CHECK(nlohmann::json::parse(file_run.out)["rows"] ==
        nlohmann::json::parse(expr_run.out)["rows"]);
  std::remove(name.c_str());
  CHECK(run({"dimk", "@" + name}).rc == kExitUsage);
}

TEST_CASE("threads flag does not change results") {
  CliResult one = run({"verify", "--only", "Diam2Equality", "--format", "json",
                       "--threads", "1"});
  CliResult four = run({"verify", "--only", "Diam2Equality", "--format", "json",
                        "--threads", "4"});
  CHECK(one.rc == kExitOk);
  CHECK(one.out == four.out);
}
