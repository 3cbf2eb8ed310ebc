#include "slidegraph/decomposition.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace slidegraph {

BlockCutTree block_cut_tree(const Graph& g) {
  int n = g.num_vertices();
  BlockCutTree out;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<Edge> edge_stack;
  int timer = 0;

  // Iterative lowlink DFS so deep path-like boards cannot overflow the
  // call stack. Each stack frame is (vertex, next neighbor index).
  std::vector<std::pair<int, int>> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      out.blocks.push_back({root});
      continue;
    }
    disc[root] = low[root] = timer++;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < g.degree(v)) {
        Vertex w = g.neighbors(v)[i++];
        if (w == parent[v]) continue;
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          edge_stack.emplace_back(v, w);
          stack.emplace_back(w, 0);
        } else if (disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) continue;
        Vertex u = stack.back().first;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          // Edges on the stack above (u,v) inclusive form one block.
          std::vector<Vertex> verts;
          Edge e;
          do {
            e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
          } while (e != Edge{u, v});
          std::sort(verts.begin(), verts.end());
          verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
          out.blocks.push_back(std::move(verts));
        }
      }
    }
  }

  // Deterministic block order regardless of DFS discovery order.
  std::sort(out.blocks.begin(), out.blocks.end());
  out.blocks_of_vertex.assign(n, {});
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (Vertex v : out.blocks[b])
      out.blocks_of_vertex[v].push_back(static_cast<int>(b));
  for (Vertex v = 0; v < n; ++v)
    if (out.blocks_of_vertex[v].size() > 1) out.cut_vertices.push_back(v);
  return out;
}

std::vector<Hallway> hallways(const Graph& g) {
  int n = g.num_vertices();
  BlockCutTree bct = block_cut_tree(g);
  std::vector<char> cut(n, 0);
  for (Vertex v : bct.cut_vertices) cut[v] = 1;

  // Bridges joining two cut vertices are the hallway edges.
  std::vector<std::vector<Vertex>> hadj(n);
  for (const auto& block : bct.blocks)
    if (block.size() == 2 && cut[block[0]] && cut[block[1]]) {
      hadj[block[0]].push_back(block[1]);
      hadj[block[1]].push_back(block[0]);
    }
  for (auto& a : hadj) std::sort(a.begin(), a.end());

  // Bare corridor interior: degree 2 in G and both edges hallway edges.
  auto interior = [&](Vertex v) {
    return g.degree(v) == 2 && hadj[v].size() == 2;
  };

  std::vector<Hallway> out;
  std::set<Edge> used;
  for (Vertex s : bct.cut_vertices) {
    if (hadj[s].empty()) {
      out.push_back({{s}});
      continue;
    }
    if (interior(s)) continue;  // emitted from one of its chain endpoints
    for (Vertex t : hadj[s]) {
      Edge e{std::min(s, t), std::max(s, t)};
      if (used.count(e)) continue;
      used.insert(e);
      std::vector<Vertex> path = {s, t};
      Vertex prev = s, cur = t;
      while (interior(cur)) {
        Vertex next = hadj[cur][0] == prev ? hadj[cur][1] : hadj[cur][0];
        used.insert({std::min(cur, next), std::max(cur, next)});
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      if (path.back() < path.front())
        std::reverse(path.begin(), path.end());
      out.push_back({std::move(path)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Hallway& a, const Hallway& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

int kappa(const Graph& g) {
  int best = 0;
  for (const auto& h : hallways(g)) best = std::max(best, h.order());
  return best;
}

namespace {

bool check_bipartite(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_theta0(const Graph& g) {
  if (g.num_vertices() != 7 || g.num_edges() != 8) return false;
  std::vector<Vertex> deg3;
  for (Vertex v = 0; v < 7; ++v) {
    if (g.degree(v) == 3)
      deg3.push_back(v);
    else if (g.degree(v) != 2)
      return false;
  }
  if (deg3.size() != 2) return false;
  // Follow the three chains leaving one hub; all must reach the other hub,
  // with 1, 2 and 2 interior vertices.
  std::vector<int> interior_counts;
  for (Vertex start : g.neighbors(deg3[0])) {
    Vertex prev = deg3[0], cur = start;
    int count = 0;
    while (g.degree(cur) == 2) {
      ++count;
      Vertex next =
          g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    if (cur != deg3[1]) return false;
    interior_counts.push_back(count);
  }
  std::sort(interior_counts.begin(), interior_counts.end());
  return interior_counts == std::vector<int>{1, 2, 2};
}

}  // namespace

Classification classify(const Graph& g) {
  int n = g.num_vertices();
  int e = g.num_edges();
  Classification c;
  c.connected = is_connected(g);
  c.biconnected = c.connected && block_cut_tree(g).cut_vertices.empty();
  c.bipartite = check_bipartite(g);
  c.tree = c.connected && e == n - 1;
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  c.is_path = c.tree && max_deg <= 2;
  c.is_cycle = c.connected && n >= 3 && e == n && max_deg == 2;
  c.is_theta0 = check_theta0(g);
  return c;
}

KappaStar kappa_star(const Graph& g, Mode mode) {
  Classification c = classify(g);
  if (!c.connected) return {false, 0};
  int n = g.num_vertices();
  if (n <= 2) return {true, 1};
  if (c.is_cycle)
    return {true, mode == Mode::literal ? n - 1 : std::max(1, n - 2)};
  if (c.biconnected) return {true, (c.bipartite || c.is_theta0) ? 2 : 1};
  return {true, kappa(g) + 1};
}

}  // namespace slidegraph
