#ifndef SLIDEGRAPH_DECOMPOSITION_HPP
#define SLIDEGRAPH_DECOMPOSITION_HPP

#include <vector>

#include "slidegraph/graph.hpp"

namespace slidegraph {

// Biconnected components ("blocks") and articulation ("cut") vertices.
// Every edge lies in exactly one block; a bridge forms a 2-vertex block.
// An isolated vertex forms a 1-vertex block of its own.
struct BlockCutTree {
  std::vector<std::vector<Vertex>> blocks;  // sorted vertex lists
  std::vector<Vertex> cut_vertices;         // sorted
  std::vector<std::vector<int>> blocks_of_vertex;  // vertex -> block indices

  bool is_cut(Vertex v) const { return blocks_of_vertex[v].size() > 1; }
};

BlockCutTree block_cut_tree(const Graph& g);

// A hallway is a maximal chain of cut vertices joined by bridges, where
// every interior vertex of the chain is bare (degree 2 in the whole graph).
// A junction — a cut vertex with side structure or three or more bridge
// directions — terminates each chain it touches and belongs to all of them;
// a cut vertex with no bridge to another cut vertex forms a chain by itself.
// The order of a hallway is its vertex count. Tiles cannot pass each other
// inside a hallway, which is what makes the order matter.
struct Hallway {
  std::vector<Vertex> vertices;  // in path order, smaller endpoint first
  int order() const { return static_cast<int>(vertices.size()); }
};

std::vector<Hallway> hallways(const Graph& g);

// Largest hallway order; 0 when there are no cut vertices.
int kappa(const Graph& g);

struct Classification {
  bool connected = false;
  bool biconnected = false;  // connected with no cut vertex
  bool bipartite = false;
  bool tree = false;
  bool is_path = false;
  bool is_cycle = false;
  bool is_theta0 = false;  // two degree-3 vertices joined by three disjoint
                           // paths with 1, 2 and 2 interior vertices
};

Classification classify(const Graph& g);

// How kappa_star reports "no finite blank count works".
struct KappaStar {
  bool finite = true;
  int value = 0;  // meaningful only when finite
};

// Two published variants of the same threshold formula differ on cycles;
// both are kept so results can be compared. `corrected` matches brute force
// everywhere and is the default throughout the CLI.
enum class Mode { literal, corrected };

// Smallest number of blanks that makes every pair of configurations
// mutually reachable: infinite for disconnected boards, 1 for n <= 2,
// n-1 (literal) or max(1, n-2) (corrected) for cycles, 2 for biconnected
// bipartite boards and theta0, 1 for other biconnected boards, and
// kappa(G) + 1 otherwise.
KappaStar kappa_star(const Graph& g, Mode mode = Mode::corrected);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_DECOMPOSITION_HPP
