// cli_test.cpp - the command driver: exit codes, JSON/text/DOT output,
// preset round-trips, and byte-for-byte determinism, all run in-process.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slidegraph/cli.hpp"
#include "slidegraph/configuration.hpp"
#include "slidegraph/io.hpp"
#include "slidegraph/presets.hpp"

using namespace slidegraph;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Writes `text` under a unique name in the test temp dir, returns the path.
std::string write_temp(const std::string& stem, const std::string& text) {
  static int counter = 0;
  std::string path =
      testing::TempDir() + "slidegraph_cli_" + stem + "_" +
      std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json";
  std::ofstream f(path);
  f << text;
  EXPECT_TRUE(f.good()) << path;
  return path;
}

std::string temp_graph(const Graph& g, const std::string& stem) {
  return write_temp(stem, graph_to_json(g).dump());
}

std::string temp_config(const Configuration& c, const std::string& stem) {
  return write_temp(stem, configuration_to_json(c).dump());
}

// === exit codes =============================================================

TEST(Cli, NoArgumentsIsAUsageError) {
  CliResult r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UnknownSubcommandIsAUsageError) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, MissingRequiredOptionIsAUsageError) {
  std::string g = temp_graph(bowtie_graph(), "bowtie");
  EXPECT_EQ(run({"circles", "--graph", g}).code, 2);  // no --k
}

TEST(Cli, MalformedGraphFileIsAFormatError) {
  std::string path = write_temp("junk", "{\"n\": 3, \"edges\": [[0, 7]]}");
  CliResult r = run({"analyze", "--graph", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, MissingFileIsAFormatError) {
  EXPECT_EQ(run({"analyze", "--graph", "/nonexistent/board.json"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  CliResult r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("slidegraph"), std::string::npos);
}

// === analyze ================================================================

TEST(Cli, AnalyzeReportsHallwayStructure) {
  // Spider: center 0 with legs of 3, 2, 2 and 4 vertices; the four maximal
  // bare corridors have orders 3, 2, 2, 4 and the longest sets kappa.
  Graph g = Graph::build(12, {{0, 1},
                              {1, 2},
                              {2, 3},
                              {0, 4},
                              {4, 5},
                              {0, 6},
                              {6, 7},
                              {0, 8},
                              {8, 9},
                              {9, 10},
                              {10, 11}});
  CliResult r = run({"analyze", "--graph", temp_graph(g, "spider")});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["kappa"], 4);
  std::vector<int> orders = j["hallway_orders"].get<std::vector<int>>();
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<int>{2, 2, 3, 4}));
  EXPECT_EQ(j["kappa_star"], 5);  // tree: one more blank than the threshold
  EXPECT_TRUE(j["tree"].get<bool>());
}

TEST(Cli, AnalyzeModeChangesCycleThreshold) {
  std::string g = temp_graph(cycle_graph(6), "c6");
  json lit = json::parse(run({"analyze", "--graph", g, "--mode", "literal"}).out);
  json cor = json::parse(run({"analyze", "--graph", g}).out);
  EXPECT_EQ(lit["kappa_star"], 5);  // n-1
  EXPECT_EQ(cor["kappa_star"], 4);  // n-2
  EXPECT_EQ(cor["mode"], "corrected");
}

TEST(Cli, AnalyzeTextAndDotFormats) {
  std::string g = temp_graph(theta0_graph(), "theta0");
  CliResult text = run({"analyze", "--graph", g, "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("theta0: yes"), std::string::npos);
  CliResult dot = run({"analyze", "--graph", g, "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("graph board {"), std::string::npos);
}

// === circles ================================================================

TEST(Cli, CirclesListsRegionsAndAnchors) {
  CliResult r =
      run({"circles", "--graph", temp_graph(bowtie_graph(), "bt"), "--k", "1"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  ASSERT_EQ(j["circles"].size(), 2u);  // the two triangles
  EXPECT_EQ(j["circles"][0]["vertices"], json({0, 1, 2}));
  EXPECT_EQ(j["circles"][0]["anchors"], json({0}));
}

TEST(Cli, CirclesDotOutputDrawsClusters) {
  CliResult r = run({"circles", "--graph", temp_graph(bowtie_graph(), "bt"),
                     "--k", "1", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("subgraph cluster_0"), std::string::npos);
  EXPECT_NE(r.out.find("subgraph cluster_1"), std::string::npos);
}

// === decide =================================================================

TEST(Cli, DecideRejectsTheClassicImpossibleSwap) {
  Graph g = grid_graph(4, 4);
  Configuration a = canonical_start(g, 1);
  Configuration b = a;
  std::swap(b.person_at[13], b.person_at[14]);  // adjacent-tile transposition
  CliResult r = run({"decide", "--graph", temp_graph(g, "g44"), "--k", "1",
                     "--from", temp_config(a, "id"), "--to",
                     temp_config(b, "swap")});
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_FALSE(j["connected"].get<bool>());
  EXPECT_EQ(j["reason"], "PARITY_MISMATCH");
}

TEST(Cli, DecideAcceptsAReachableTarget) {
  Graph g = grid_graph(4, 4);
  Configuration a = canonical_start(g, 1);
  Configuration b = apply_swap(g, a, 15, 11);  // one legal slide
  CliResult r = run({"decide", "--graph", temp_graph(g, "g44"), "--from",
                     temp_config(a, "id"), "--to", temp_config(b, "slid")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["connected"].get<bool>());
}

TEST(Cli, DecideChecksBlankCountAgainstFiles) {
  Graph g = grid_graph(2, 3);
  Configuration a = canonical_start(g, 2);
  CliResult r = run({"decide", "--graph", temp_graph(g, "g23"), "--k", "1",
                     "--from", temp_config(a, "a"), "--to",
                     temp_config(a, "b")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--k"), std::string::npos);
}

// === count ==================================================================

TEST(Cli, CountMatchesTheClassicBoards) {
  CliResult theta = run({"count", "--graph", temp_graph(theta0_graph(), "t0"),
                         "--k", "1", "--format", "text"});
  EXPECT_EQ(theta.code, 0);
  EXPECT_EQ(theta.out, "6\n");

  CliResult fifteen = run({"count", "--graph", temp_graph(grid_graph(4, 4), "g"),
                           "--k", "1", "--format", "text"});
  EXPECT_EQ(fifteen.out, "2\n");
}

TEST(Cli, CountJsonCarriesModeAndDecimalString) {
  CliResult r = run({"count", "--graph", temp_graph(cycle_graph(5), "c5"),
                     "--k", "1", "--mode", "literal"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["mode"], "literal");
  // The published cycle factor keeps many more classes than enumeration
  // finds (the corrected count for C5 with one blank is 6).
  EXPECT_EQ(j["components"].get<std::string>(), "60");
}

// === solve ==================================================================

TEST(Cli, SolveEmitsAReplayableSequence) {
  Graph g = grid_graph(2, 3);
  Configuration a = canonical_start(g, 2);
  Configuration b = a;
  std::swap(b.person_at[0], b.person_at[1]);
  CliResult r = run({"solve", "--graph", temp_graph(g, "g23"), "--from",
                     temp_config(a, "a"), "--to", temp_config(b, "b")});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "SOLVED");
  MoveSequence moves = moves_from_json(j["moves"]);
  EXPECT_EQ(moves.size(), j["length"].get<size_t>());
  EXPECT_EQ(replay(g, a, moves).person_at, b.person_at);
}

TEST(Cli, SolveExitsOneWhenUnreachable) {
  Graph g = path_graph(3);
  Configuration a = canonical_start(g, 1);
  Configuration b = a;
  std::swap(b.person_at[0], b.person_at[1]);
  CliResult r = run({"solve", "--graph", temp_graph(g, "p3"), "--from",
                     temp_config(a, "a"), "--to", temp_config(b, "b")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["status"], "NOT_CONNECTED");
}

TEST(Cli, SolveExitsThreeWhenTheCapRefuses) {
  Graph g = grid_graph(4, 4);
  Configuration a = canonical_start(g, 1);
  Configuration b = apply_swap(g, a, 15, 11);  // reachable, but 16! states
  CliResult r = run({"solve", "--graph", temp_graph(g, "g44"), "--from",
                     temp_config(a, "a"), "--to", temp_config(b, "b")});
  EXPECT_EQ(r.code, 3);
  json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "FALLBACK_EXCEEDED");
  EXPECT_EQ(j["state_bound"].get<long long>(), 20922789888000LL);  // 16!
}

// === oracle =================================================================

TEST(Cli, OracleEnumeratesComponents) {
  CliResult r = run({"oracle", "--graph", temp_graph(grid_graph(2, 3), "g23"),
                     "--k", "1"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["num_states"], 720);
  EXPECT_EQ(j["num_components"], 2);
  EXPECT_EQ(j["component_sizes"], json({360, 360}));
}

TEST(Cli, OracleHonorsItsCap) {
  CliResult r = run({"oracle", "--graph", temp_graph(grid_graph(4, 4), "g44"),
                     "--k", "1", "--cap", "1000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

// === preset =================================================================

TEST(Cli, EveryPresetRoundTripsThroughJson) {
  const std::vector<std::string> names = {
      "grid(4,4)",        "grid(2,3)",    "path(5)",      "cycle(6)",
      "coiled15",         "black_white",  "theta0",       "snake_tongue(6)",
      "stopwatch(7)",     "hourglass(3,4)", "bowtie",
  };
  for (const std::string& name : names) {
    CliResult r = run({"preset", "--name", name});
    ASSERT_EQ(r.code, 0) << name << ": " << r.err;
    Graph parsed = graph_from_json(json::parse(r.out));
    EXPECT_TRUE(parsed == make_preset(name)) << name;
  }
}

TEST(Cli, PresetWritesFiles) {
  std::string out = testing::TempDir() + "slidegraph_cli_preset_out.json";
  std::string start = testing::TempDir() + "slidegraph_cli_preset_start.json";
  CliResult r = run({"preset", "--name", "black_white", "--out", out,
                     "--start-out", start});
  ASSERT_EQ(r.code, 0);
  Graph g = load_graph_file(out);
  EXPECT_TRUE(g == black_white_graph());
  Configuration c = configuration_from_json(g, load_json_file(start));
  EXPECT_EQ(c.person_at, black_white_start().person_at);
  std::remove(out.c_str());
  std::remove(start.c_str());
}

TEST(Cli, PresetStartOutRequiresADistinguishedStart) {
  std::string start = testing::TempDir() + "slidegraph_cli_no_start.json";
  CliResult r = run({"preset", "--name", "theta0", "--start-out", start});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, PresetUnknownNameIsAFormatError) {
  EXPECT_EQ(run({"preset", "--name", "dodecahedron"}).code, 2);
}

TEST(Cli, PresetDotShowsBlanksGrey) {
  CliResult r = run({"preset", "--name", "black_white", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fillcolor=grey"), std::string::npos);
}

// === determinism ============================================================

TEST(Cli, OutputBytesAreDeterministic) {
  Graph g = grid_graph(2, 3);
  Configuration a = canonical_start(g, 2);
  Configuration b = a;
  std::swap(b.person_at[0], b.person_at[4]);
  std::string gf = temp_graph(g, "g23");
  std::string af = temp_config(a, "a");
  std::string bf = temp_config(b, "b");

  std::vector<std::vector<std::string>> invocations = {
      {"analyze", "--graph", gf},
      {"circles", "--graph", gf, "--k", "2"},
      {"count", "--graph", gf, "--k", "2"},
      {"decide", "--graph", gf, "--from", af, "--to", bf},
      {"solve", "--graph", gf, "--from", af, "--to", bf},
      {"oracle", "--graph", gf, "--k", "2"},
      {"preset", "--name", "theta0"},
  };
  for (const auto& args : invocations) {
    CliResult first = run(args);
    CliResult second = run(args);
    EXPECT_EQ(first.out, second.out) << args[0];
    EXPECT_EQ(first.code, second.code) << args[0];
  }
}

}  // namespace
