#include "slidegraph/circles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "slidegraph/decomposition.hpp"

namespace slidegraph {

namespace {

constexpr size_t kCircleStateCap = 1u << 18;

bool well_lit(const Graph& g, const std::vector<Vertex>& vertices, int k) {
  Graph sub = induced_subgraph(g, vertices);
  for (const auto& h : hallways(sub))
    if (h.order() >= k) return false;
  return true;
}

std::vector<Vertex> union_vertices(
    const std::vector<std::vector<Vertex>>& blocks,
    const std::vector<int>& ids) {
  std::vector<Vertex> out;
  for (int b : ids)
    out.insert(out.end(), blocks[b].begin(), blocks[b].end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Circle> social_circles(const Graph& g, int k) {
  int n = g.num_vertices();
  if (k < 1 || k > n)
    throw FormatError("blank count k=" + std::to_string(k) + " out of range");
  if (!is_connected(g))
    throw FormatError("circles are defined for connected boards only");

  std::vector<std::vector<Vertex>> result_sets;
  if (kappa(g) < k) {
    // No hallway can block k blanks anywhere, so the whole board is one
    // circle. (This also keeps huge path-like boards linear-time.)
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    result_sets.push_back(std::move(all));
  } else {
    BlockCutTree bct = block_cut_tree(g);
    int m = static_cast<int>(bct.blocks.size());
    std::vector<std::set<int>> block_adj(m);
    for (Vertex v : bct.cut_vertices)
      for (int a : bct.blocks_of_vertex[v])
        for (int b : bct.blocks_of_vertex[v])
          if (a != b) block_adj[a].insert(b);

    // Grow block subsets one adjacent block at a time, in every order,
    // pruning subsets whose induced subgraph has a hallway of order >= k.
    // Keeping all orders matters because absorbing a block can both create
    // a bottleneck (lengthening a chain) and remove one (splitting a chain
    // at a junction), so growth is not monotone along a single order.
    std::set<std::vector<int>> visited;
    std::queue<std::vector<int>> frontier;
    std::set<std::vector<Vertex>> maximal_candidates;
    for (int b = 0; b < m; ++b) {
      std::vector<int> seed = {b};
      if (visited.insert(seed).second) frontier.push(seed);
    }
    while (!frontier.empty()) {
      std::vector<int> state = frontier.front();
      frontier.pop();
      std::set<int> candidates;
      for (int b : state)
        for (int c : block_adj[b]) candidates.insert(c);
      for (int b : state) candidates.erase(b);
      bool grew = false;
      for (int c : candidates) {
        std::vector<int> next = state;
        next.insert(std::lower_bound(next.begin(), next.end(), c), c);
        auto [it, fresh] = visited.emplace(next);
        if (visited.size() > kCircleStateCap)
          throw CapError("circle enumeration exceeded its state budget");
        bool lit = well_lit(g, union_vertices(bct.blocks, next), k);
        if (lit) grew = true;
        if (fresh) {
          if (lit)
            frontier.push(*it);
          else
            visited.erase(it);  // dark subsets are re-checked cheaply
        }
      }
      if (!grew)
        maximal_candidates.insert(union_vertices(bct.blocks, state));
    }

    // Distinct block subsets can share a vertex set, and locally maximal
    // sets need not be globally maximal; keep the set-maximal ones.
    std::vector<std::vector<Vertex>> cands(maximal_candidates.begin(),
                                           maximal_candidates.end());
    for (size_t i = 0; i < cands.size(); ++i) {
      bool dominated = false;
      for (size_t j = 0; j < cands.size() && !dominated; ++j)
        dominated = i != j && cands[j].size() > cands[i].size() &&
                    std::includes(cands[j].begin(), cands[j].end(),
                                  cands[i].begin(), cands[i].end());
      if (!dominated) result_sets.push_back(cands[i]);
    }
    std::sort(result_sets.begin(), result_sets.end());
  }

  // Postcondition checks: coverage, minimum size, and the overlap identity.
  std::vector<char> covered(n, 0);
  long long overlap_sum = 0;
  for (const auto& s : result_sets) {
    if (static_cast<int>(s.size()) < k)
      throw std::logic_error("internal error: circle smaller than k");
    overlap_sum += static_cast<long long>(s.size()) - k;
    for (Vertex v : s) covered[v] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    throw std::logic_error("internal error: circles do not cover the board");
  if (overlap_sum != n - k)
    throw std::logic_error("internal error: circle overlap identity failed");

  std::vector<Circle> out;
  out.reserve(result_sets.size());
  for (auto& s : result_sets) {
    Circle c;
    c.anchors.assign(s.begin(), s.begin() + k);
    c.vertices = std::move(s);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace slidegraph
