// oracle_test.cpp - brute-force state-space explorer: ranking, component
// enumeration on boards small enough to check by hand or by frozen values,
// cap behavior, and the small-graph family.

#include <gtest/gtest.h>

#include <numeric>

#include "slidegraph/oracle.hpp"
#include "slidegraph/presets.hpp"

using namespace slidegraph;

namespace {

TEST(Rank, RoundTrip) {
  int n = 6, k = 2;
  for (long long r : {0LL, 1LL, 119LL, 360LL, 719LL}) {
    Configuration c = configuration_of_rank(n, k, r);
    EXPECT_EQ(rank_of(c), r);
  }
  Configuration first = configuration_of_rank(4, 1, 0);
  EXPECT_EQ(first.person_at, (std::vector<int>{0, 1, 2, 3}));
  Configuration last = configuration_of_rank(4, 1, 23);
  EXPECT_EQ(last.person_at, (std::vector<int>{3, 2, 1, 0}));
}

TEST(Oracle, SingleEdge) {
  OracleResult res = enumerate_components(path_graph(2), 1);
  EXPECT_EQ(res.num_states, 2);
  EXPECT_EQ(res.num_components, 1);
}

TEST(Oracle, SingleVertex) {
  OracleResult res = enumerate_components(path_graph(1), 1);
  EXPECT_EQ(res.num_states, 1);
  EXPECT_EQ(res.num_components, 1);
}

TEST(Oracle, PathThreeOneBlank) {
  // one blank on a path can never reorder the two tiles
  OracleResult res = enumerate_components(path_graph(3), 1);
  EXPECT_EQ(res.num_states, 6);
  EXPECT_EQ(res.num_components, 2);
  EXPECT_EQ(res.component_sizes, (std::vector<long long>{3, 3}));
}

TEST(Oracle, TriangleOneBlank) {
  OracleResult res = enumerate_components(cycle_graph(3), 1);
  EXPECT_EQ(res.num_states, 6);
  EXPECT_EQ(res.num_components, 1);
}

TEST(Oracle, DisconnectedBoardKeepsPeopleApart) {
  Graph g = Graph::build(3, {{0, 1}});  // an edge plus an isolated vertex
  OracleResult res = enumerate_components(g, 1);
  EXPECT_EQ(res.num_states, 6);
  // the person on vertex 2 is stuck; the blank may or may not share its
  // component with it
  EXPECT_EQ(res.num_components, 4);
}

TEST(Oracle, ComponentIdsAreDeterministic) {
  OracleResult a = enumerate_components(cycle_graph(4), 1);
  OracleResult b = enumerate_components(cycle_graph(4), 1);
  EXPECT_EQ(a.component_of, b.component_of);
  EXPECT_EQ(a.component_of[0], 0);  // smallest rank seeds component 0
}

TEST(Oracle, CapIsEnforced) {
  EXPECT_THROW(enumerate_components(grid_graph(3, 4), 1), CapError);
  EXPECT_THROW(enumerate_components(path_graph(8), 1, 1000), CapError);
}

TEST(Oracle, RejectsBadBlankCount) {
  EXPECT_THROW(enumerate_components(path_graph(3), 0), FormatError);
  EXPECT_THROW(enumerate_components(path_graph(3), 4), FormatError);
}

TEST(Oracle, ConnectedPairQueries) {
  Graph g = path_graph(3);
  Configuration id = canonical_start(g, 1);  // a1 a2 b1
  Configuration rotated = id;
  rotated.person_at = {0, 1, 2};  // b1 a1 a2: same tile order, shifted
  EXPECT_TRUE(oracle_connected(g, id, rotated));
  Configuration swapped = id;
  swapped.person_at = {2, 1, 0};  // a2 a1 b1: tiles reordered
  EXPECT_FALSE(oracle_connected(g, id, swapped));
}

TEST(Oracle, MinBlankCounts) {
  EXPECT_EQ(oracle_min_k_connected(path_graph(2)), 1);
  EXPECT_EQ(oracle_min_k_connected(path_graph(4)), 3);
  EXPECT_EQ(oracle_min_k_connected(cycle_graph(3)), 1);
  EXPECT_EQ(oracle_min_k_connected(cycle_graph(5)), 3);
  EXPECT_EQ(oracle_min_k_connected(snake_tongue_graph(4)), 2);
  EXPECT_EQ(oracle_min_k_connected(Graph::build(3, {{0, 1}})), std::nullopt);
}

TEST(GraphFamily, CountsUpToIsomorphism) {
  // number of connected graphs on n labeled-free vertices
  EXPECT_EQ(connected_graphs_up_to_iso(1).size(), 1u);
  EXPECT_EQ(connected_graphs_up_to_iso(2).size(), 1u);
  EXPECT_EQ(connected_graphs_up_to_iso(3).size(), 2u);
  EXPECT_EQ(connected_graphs_up_to_iso(4).size(), 6u);
  EXPECT_EQ(connected_graphs_up_to_iso(5).size(), 21u);
  EXPECT_EQ(connected_graphs_up_to_iso(6).size(), 112u);
}

TEST(GraphFamily, MembersAreConnectedAndDistinct) {
  auto family = connected_graphs_up_to_iso(5);
  for (const auto& g : family) {
    EXPECT_EQ(g.num_vertices(), 5);
    EXPECT_TRUE(is_connected(g));
  }
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      EXPECT_FALSE(family[i] == family[j]);
}

}  // namespace
