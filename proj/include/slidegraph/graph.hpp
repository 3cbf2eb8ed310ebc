#ifndef SLIDEGRAPH_GRAPH_HPP
#define SLIDEGRAPH_GRAPH_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slidegraph {

// Base class for all user-facing failures raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad graph/configuration/move data, bad arguments.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration or search exceeded its state budget.
class CapError : public Error {
 public:
  using Error::Error;
};

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1.
// Immutable after construction; edges are stored normalized (u < v, sorted,
// no duplicates) and adjacency lists are sorted, which keeps every algorithm
// in the library deterministic.
class Graph {
 public:
  Graph() = default;

  // Validates and normalizes the edge list. Rejects out-of-range endpoints,
  // self-loops and duplicate edges.
  static Graph build(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Induced subgraph on `vertices` (need not be sorted; duplicates rejected).
// Vertex i of the result corresponds to vertices[i] after sorting.
Graph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_GRAPH_HPP
