#include "slidegraph/counting.hpp"

#include <gtest/gtest.h>

#include "slidegraph/graph.hpp"
#include "slidegraph/oracle.hpp"
#include "slidegraph/presets.hpp"

namespace slidegraph {
namespace {

long long corrected(const Graph& g, int k) {
  return count_components(g, k, Mode::corrected).convert_to<long long>();
}

long long literal_count(const Graph& g, int k) {
  return count_components(g, k, Mode::literal).convert_to<long long>();
}

// =========================================================================
// helpers
// =========================================================================

TEST(Counting, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(25) % 7, 0);  // stays exact well past 64 bits
}

// =========================================================================
// frozen values on named boards
// =========================================================================

TEST(Counting, Theta0) {
  Graph g = theta0_graph();
  EXPECT_EQ(corrected(g, 1), 6);
  for (int k = 2; k <= 7; ++k) EXPECT_EQ(corrected(g, k), 1) << "k=" << k;
}

TEST(Counting, Grids) {
  EXPECT_EQ(corrected(grid_graph(2, 3), 1), 2);
  EXPECT_EQ(corrected(grid_graph(2, 3), 2), 1);
  EXPECT_EQ(corrected(grid_graph(3, 3), 1), 2);
  EXPECT_EQ(corrected(grid_graph(4, 4), 1), 2);  // the 15-puzzle halves
}

TEST(Counting, CyclesCorrectedAndLiteral) {
  EXPECT_EQ(corrected(cycle_graph(4), 1), 2);
  EXPECT_EQ(literal_count(cycle_graph(4), 1), 12);
  EXPECT_EQ(corrected(cycle_graph(5), 2), 2);
  EXPECT_EQ(corrected(cycle_graph(6), 1), 24);
  EXPECT_EQ(corrected(cycle_graph(6), 2), 6);
  EXPECT_EQ(literal_count(cycle_graph(6), 2), 360);
  EXPECT_EQ(corrected(cycle_graph(6), 5), 1);  // one tile left
  EXPECT_EQ(literal_count(cycle_graph(6), 5), 1);
}

TEST(Counting, StarAndPaths) {
  Graph star = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(corrected(star, 1), 6);
  EXPECT_EQ(corrected(path_graph(4), 2), 2);
  EXPECT_EQ(corrected(path_graph(5), 2), 6);
  EXPECT_EQ(corrected(path_graph(5), 4), 1);
}

TEST(Counting, RingsWithPendants) {
  EXPECT_EQ(corrected(stopwatch_graph(6), 1), 30);
  EXPECT_EQ(corrected(stopwatch_graph(6), 2), 1);
  EXPECT_EQ(corrected(stopwatch_graph(5), 1), 8);
  EXPECT_EQ(corrected(bowtie_graph(), 1), 6);
  EXPECT_EQ(corrected(bowtie_graph(), 2), 1);
  EXPECT_EQ(corrected(hourglass_graph(3, 3), 1), 6);
  EXPECT_EQ(corrected(hourglass_graph(3, 3), 2), 1);
  EXPECT_EQ(corrected(hourglass_graph(3, 4), 2), 1);
}

TEST(Counting, DarkHallwayBoards) {
  // Two rooms joined by an order-3 corridor: with 3 blanks the corridor
  // stays dark and the tiles split over two overlapping circles.
  Graph d6 = Graph::build(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_EQ(corrected(d6, 3), 3);
  EXPECT_EQ(corrected(d6, 4), 1);

  Graph dumbbell = Graph::build(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4},
                                    {4, 5}, {4, 6}, {5, 6}});
  EXPECT_EQ(corrected(dumbbell, 2), 30);
  EXPECT_EQ(corrected(dumbbell, 3), 6);
}

TEST(Counting, SingleVertexAndEdge) {
  EXPECT_EQ(corrected(Graph::build(1, {}), 1), 1);
  EXPECT_EQ(corrected(Graph::build(2, {{0, 1}}), 1), 1);
  EXPECT_EQ(corrected(Graph::build(2, {{0, 1}}), 2), 1);
}

TEST(Counting, RejectsBadBlankCounts) {
  Graph g = path_graph(3);
  EXPECT_THROW(count_components(g, 0, Mode::corrected), FormatError);
  EXPECT_THROW(count_components(g, 4, Mode::corrected), FormatError);
}

// =========================================================================
// disconnected boards
// =========================================================================

TEST(Counting, DisconnectedBoardSumsOverSplits) {
  Graph g = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  // Blank in either triangle: C(5,2) tile choices x 1 mixable x 3! frozen.
  EXPECT_EQ(corrected(g, 1), 120);
  OracleResult res = enumerate_components(g, 1);
  EXPECT_EQ(res.num_components, 120);

  Graph pair2 = Graph::build(4, {{0, 1}, {2, 3}});
  OracleResult res2 = enumerate_components(pair2, 2);
  EXPECT_EQ(corrected(pair2, 2), res2.num_components);
}

// =========================================================================
// exhaustive agreement with brute force
// =========================================================================

TEST(Counting, MatchesBruteForceOnAllSmallBoards) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      for (int k = 1; k <= n; ++k) {
        OracleResult res = enumerate_components(g, k);
        EXPECT_EQ(count_components(g, k, Mode::corrected), res.num_components)
            << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Counting, MatchesBruteForceOnSelectedSixVertexBoards) {
  std::vector<Graph> boards = {
      grid_graph(2, 3),     cycle_graph(6),          stopwatch_graph(6),
      snake_tongue_graph(6), path_graph(6),
      Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
  };
  for (const Graph& g : boards) {
    for (int k = 1; k <= 6; ++k) {
      OracleResult res = enumerate_components(g, k);
      EXPECT_EQ(count_components(g, k, Mode::corrected), res.num_components)
          << "k=" << k;
    }
  }
}

TEST(Counting, LiteralMatchesCorrectedOffRings) {
  // The two modes only part ways when a circle is a ring with at least
  // two tiles on it.
  std::vector<Graph> boards = {theta0_graph(), grid_graph(2, 3),
                               path_graph(6), snake_tongue_graph(6),
                               Graph::build(4, {{0, 1}, {0, 2}, {0, 3}})};
  for (const Graph& g : boards) {
    for (int k = 1; k <= g.num_vertices(); ++k) {
      EXPECT_EQ(count_components(g, k, Mode::literal),
                count_components(g, k, Mode::corrected));
    }
  }
}

// =========================================================================
// scale: closed form needs no enumeration
// =========================================================================

TEST(Counting, HandlesBigBoardsSymbolically) {
  // 40-vertex ring: component count is (40-k-1)! for moderate k.
  Graph g = cycle_graph(40);
  EXPECT_EQ(count_components(g, 2, Mode::corrected), factorial(37));
  EXPECT_EQ(count_components(g, 39, Mode::corrected), 1);

  // Long path with 2 blanks: n-2 overlapping windows of three vertices,
  // one private tile slot each -> (n-2)! arrangements.
  Graph p = path_graph(30);
  EXPECT_EQ(count_components(p, 2, Mode::corrected), factorial(28));
}

}  // namespace
}  // namespace slidegraph
