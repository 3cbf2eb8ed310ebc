#include "slidegraph/graph.hpp"

#include <algorithm>
#include <queue>

namespace slidegraph {

Graph Graph::build(int n, std::vector<Edge> edges) {
  if (n < 0) throw FormatError("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw FormatError("edge endpoint out of range: (" + std::to_string(u) +
                        "," + std::to_string(v) + ") with n=" +
                        std::to_string(n));
    if (u == v)
      throw FormatError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw FormatError("duplicate edge in edge list");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

Graph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw FormatError("duplicate vertex in induced subgraph");
  std::vector<int> index(g.num_vertices(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.num_vertices())
      throw FormatError("vertex out of range in induced subgraph");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0)
      edges.emplace_back(index[u], index[v]);
  return Graph::build(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      out[id].push_back(u);
      for (Vertex w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  return connected_components(g).size() == 1;
}

}  // namespace slidegraph
