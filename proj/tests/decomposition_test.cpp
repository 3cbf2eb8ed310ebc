// decomposition_test.cpp - blocks and cut vertices, hallway extraction,
// kappa, structural classification and the blank-count threshold kappa_star,
// cross-checked against the brute-force explorer.

#include <gtest/gtest.h>

#include <algorithm>

#include "slidegraph/decomposition.hpp"
#include "slidegraph/oracle.hpp"
#include "slidegraph/presets.hpp"

using namespace slidegraph;

namespace {

// spine 0-1-2-3-4 with a leaf 5 at vertex 2
Graph make_t_graph() {
  return Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
}

// triangles {0,1,2} and {4,5,6} joined by the path 2-3-4
Graph make_dumbbell() {
  return Graph::build(
      7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

// center 0 with three legs of length 2
Graph make_spider() {
  return Graph::build(7, {{0, 1}, {1, 4}, {0, 2}, {2, 5}, {0, 3}, {3, 6}});
}

// triangle {0,1,2} with pendant paths 2-3-5 and 2-4-6: the triangle is a
// side room at the junction vertex 2
Graph make_sideroom() {
  return Graph::build(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5},
                          {4, 6}});
}

std::vector<std::vector<Vertex>> hallway_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& h : hallways(g)) out.push_back(h.vertices);
  return out;
}

// ============================================================
// Blocks and cut vertices
// ============================================================

TEST(BlockCutTree, Bowtie) {
  BlockCutTree bct = block_cut_tree(bowtie_graph());
  ASSERT_EQ(bct.blocks.size(), 2u);
  EXPECT_EQ(bct.blocks[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(bct.blocks[1], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(bct.cut_vertices, (std::vector<Vertex>{2}));
  EXPECT_TRUE(bct.is_cut(2));
  EXPECT_FALSE(bct.is_cut(0));
}

TEST(BlockCutTree, PathHasEdgeBlocks) {
  BlockCutTree bct = block_cut_tree(path_graph(4));
  ASSERT_EQ(bct.blocks.size(), 3u);
  EXPECT_EQ(bct.cut_vertices, (std::vector<Vertex>{1, 2}));
}

TEST(BlockCutTree, BiconnectedIsOneBlock) {
  for (const Graph& g : {theta0_graph(), cycle_graph(5), grid_graph(3, 3)}) {
    BlockCutTree bct = block_cut_tree(g);
    EXPECT_EQ(bct.blocks.size(), 1u);
    EXPECT_TRUE(bct.cut_vertices.empty());
  }
}

TEST(BlockCutTree, IsolatedVertexIsItsOwnBlock) {
  BlockCutTree bct = block_cut_tree(Graph::build(3, {{0, 1}}));
  ASSERT_EQ(bct.blocks.size(), 2u);
  EXPECT_EQ(bct.blocks[1], (std::vector<Vertex>{2}));
}

TEST(BlockCutTree, StopwatchBlocks) {
  BlockCutTree bct = block_cut_tree(stopwatch_graph(7));
  ASSERT_EQ(bct.blocks.size(), 2u);
  EXPECT_EQ(bct.blocks[0], (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(bct.blocks[1], (std::vector<Vertex>{0, 6}));
  EXPECT_EQ(bct.cut_vertices, (std::vector<Vertex>{0}));
}

// Cut vertices agree with the definition: removing one increases the
// number of connected components.
TEST(BlockCutTree, CutVerticesMatchDefinitionOnFamily) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      BlockCutTree bct = block_cut_tree(g);
      for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> rest;
        for (Vertex u = 0; u < n; ++u)
          if (u != v) rest.push_back(u);
        bool disconnects = !is_connected(induced_subgraph(g, rest));
        EXPECT_EQ(bct.is_cut(v), disconnects)
            << "n=" << n << " vertex " << v;
      }
      // every edge in exactly one block
      size_t edge_total = 0;
      for (const auto& blk : bct.blocks) {
        Graph sub = induced_subgraph(g, blk);
        edge_total += sub.num_edges();
      }
      EXPECT_GE(edge_total, (size_t)g.num_edges());
    }
  }
}

// ============================================================
// Hallways and kappa
// ============================================================

TEST(Hallways, PathInteriorIsOneChain) {
  EXPECT_EQ(hallway_lists(path_graph(6)),
            (std::vector<std::vector<Vertex>>{{1, 2, 3, 4}}));
  EXPECT_EQ(kappa(path_graph(6)), 4);
  EXPECT_EQ(kappa(path_graph(3)), 1);
  EXPECT_EQ(kappa(path_graph(2)), 0);
}

TEST(Hallways, BiconnectedHasNone) {
  EXPECT_TRUE(hallways(theta0_graph()).empty());
  EXPECT_EQ(kappa(theta0_graph()), 0);
  EXPECT_EQ(kappa(cycle_graph(8)), 0);
}

TEST(Hallways, BowtieCutVertexIsOrderOne) {
  EXPECT_EQ(hallway_lists(bowtie_graph()),
            (std::vector<std::vector<Vertex>>{{2}}));
  EXPECT_EQ(kappa(bowtie_graph()), 1);
}

TEST(Hallways, ChainRunsIntoBranchVertex) {
  // snake_tongue(6): path 0-1-2-3 with tips {4,5} at 3; the chain 1-2-3
  // includes the branch vertex 3 as an endpoint
  EXPECT_EQ(hallway_lists(snake_tongue_graph(6)),
            (std::vector<std::vector<Vertex>>{{1, 2, 3}}));
  EXPECT_EQ(kappa(snake_tongue_graph(6)), 3);
}

TEST(Hallways, JunctionSplitsChains) {
  // spider: three chains of order 2 meeting at the center, not one long one
  auto lists = hallway_lists(make_spider());
  EXPECT_EQ(lists, (std::vector<std::vector<Vertex>>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(kappa(make_spider()), 2);

  // T graph: chains (1,2) and (2,3) sharing the junction 2
  EXPECT_EQ(hallway_lists(make_t_graph()),
            (std::vector<std::vector<Vertex>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(kappa(make_t_graph()), 2);
}

TEST(Hallways, SideRoomDisqualifiesInterior) {
  // vertex 2 carries a triangle, so it terminates both chains
  EXPECT_EQ(hallway_lists(make_sideroom()),
            (std::vector<std::vector<Vertex>>{{2, 3}, {2, 4}}));
  EXPECT_EQ(kappa(make_sideroom()), 2);
}

TEST(Hallways, DumbbellChainSpansThePath) {
  EXPECT_EQ(hallway_lists(make_dumbbell()),
            (std::vector<std::vector<Vertex>>{{2, 3, 4}}));
  EXPECT_EQ(kappa(make_dumbbell()), 3);
}

TEST(Hallways, RingPendantsStayIsolated) {
  // 4-cycle with pendants at ring vertices 0 and 1: the ring edge (0,1)
  // is not a bridge, so the two cut vertices form separate order-1 chains
  Graph g = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}});
  EXPECT_EQ(hallway_lists(g), (std::vector<std::vector<Vertex>>{{0}, {1}}));
  EXPECT_EQ(kappa(g), 1);
}

// ============================================================
// Classification
// ============================================================

TEST(Classify, Shapes) {
  Classification c = classify(theta0_graph());
  EXPECT_TRUE(c.connected);
  EXPECT_TRUE(c.biconnected);
  EXPECT_FALSE(c.bipartite);
  EXPECT_TRUE(c.is_theta0);
  EXPECT_FALSE(c.is_cycle);

  c = classify(cycle_graph(6));
  EXPECT_TRUE(c.is_cycle);
  EXPECT_TRUE(c.bipartite);
  EXPECT_FALSE(c.is_theta0);

  c = classify(path_graph(5));
  EXPECT_TRUE(c.is_path);
  EXPECT_TRUE(c.tree);
  EXPECT_FALSE(c.biconnected);

  c = classify(grid_graph(2, 3));
  EXPECT_TRUE(c.biconnected);
  EXPECT_TRUE(c.bipartite);

  c = classify(Graph::build(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(c.connected);
}

TEST(Classify, Theta0NeedsExactChainLengths) {
  // same degree sequence family, wrong chain split: 7-cycle with a chord
  // making paths of interior lengths {0,3,2} etc. must not classify
  Graph not_theta = Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                     {5, 6}, {0, 6}, {0, 3}});
  EXPECT_FALSE(classify(not_theta).is_theta0);
  EXPECT_TRUE(classify(theta0_graph()).is_theta0);
}

// ============================================================
// kappa_star
// ============================================================

TEST(KappaStar, DispatchTable) {
  auto ks = [](const Graph& g, Mode m) { return kappa_star(g, m); };
  // disconnected -> infinite
  EXPECT_FALSE(ks(Graph::build(3, {{0, 1}}), Mode::corrected).finite);
  // tiny boards
  EXPECT_EQ(ks(path_graph(1), Mode::corrected).value, 1);
  EXPECT_EQ(ks(path_graph(2), Mode::corrected).value, 1);
  // cycles differ between the modes
  EXPECT_EQ(ks(cycle_graph(3), Mode::literal).value, 2);
  EXPECT_EQ(ks(cycle_graph(3), Mode::corrected).value, 1);
  EXPECT_EQ(ks(cycle_graph(7), Mode::literal).value, 6);
  EXPECT_EQ(ks(cycle_graph(7), Mode::corrected).value, 5);
  // biconnected: bipartite or theta0 need 2, the rest need 1
  EXPECT_EQ(ks(grid_graph(4, 4), Mode::corrected).value, 2);
  EXPECT_EQ(ks(theta0_graph(), Mode::corrected).value, 2);
  EXPECT_EQ(ks(coiled15_graph(), Mode::corrected).value, 1);
  EXPECT_EQ(ks(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                {2, 3}}),
               Mode::corrected)
                .value,
            1);  // K4
  // everything else: kappa + 1
  EXPECT_EQ(ks(path_graph(4), Mode::corrected).value, 3);
  EXPECT_EQ(ks(bowtie_graph(), Mode::corrected).value, 2);
  EXPECT_EQ(ks(make_dumbbell(), Mode::corrected).value, 4);
  EXPECT_EQ(ks(make_spider(), Mode::corrected).value, 3);
  EXPECT_EQ(ks(hourglass_graph(3, 4), Mode::corrected).value, 2);
  EXPECT_EQ(ks(stopwatch_graph(7), Mode::corrected).value, 2);
  EXPECT_EQ(ks(snake_tongue_graph(6), Mode::corrected).value, 4);
}

TEST(KappaStar, CorrectedMatchesBruteForceOnProbes) {
  for (const Graph& g :
       {path_graph(6), cycle_graph(5), make_t_graph(), make_spider(),
        make_sideroom(), make_dumbbell(), snake_tongue_graph(6),
        stopwatch_graph(6), hourglass_graph(3, 3), bowtie_graph()}) {
    auto expect = oracle_min_k_connected(g);
    ASSERT_TRUE(expect.has_value());
    KappaStar got = kappa_star(g, Mode::corrected);
    ASSERT_TRUE(got.finite);
    EXPECT_EQ(got.value, *expect);
  }
}

}  // namespace
