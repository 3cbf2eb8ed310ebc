#include "slidegraph/counting.hpp"

#include <algorithm>
#include <vector>

#include "slidegraph/circles.hpp"

namespace slidegraph {
namespace {

// Mixing factor of one circle holding k blanks.
BigCount circle_factor(const Graph& g, const Circle& circle, int k,
                       Mode mode) {
  int size = static_cast<int>(circle.vertices.size());
  if (size <= 2) return 1;  // at most one tile: nothing to distinguish
  Graph sub = induced_subgraph(g, circle.vertices);
  Classification cls = classify(sub);
  if (cls.is_cycle) {
    if (k >= size - 1) return 1;  // at most one tile on the ring
    if (mode == Mode::literal) return factorial(size) / 2;
    BigCount f = factorial(size - k - 1);
    return f > 1 ? f : BigCount(1);
  }
  if (k == 1 && cls.is_theta0) return 6;
  if (k == 1 && cls.bipartite) return 2;
  return 1;
}

BigCount count_connected(const Graph& g, int k, Mode mode) {
  const int n = g.num_vertices();
  std::vector<Circle> circles = social_circles(g, k);

  // Tiles distribute freely over the circles' private slots.
  BigCount result = factorial(n - k);
  for (const Circle& c : circles) {
    result /= factorial(static_cast<int>(c.vertices.size()) - k);
  }
  for (const Circle& c : circles) {
    result *= circle_factor(g, c, k, mode);
  }
  return result;
}

// Distributes blanks over the board's pieces: every split of the k blank
// people and n-k tile people over the components multiplies the
// per-component counts. A piece without blanks is frozen, so each of its
// people arrangements is its own component.
BigCount count_disconnected(const std::vector<std::vector<Vertex>>& comps,
                            const std::vector<Graph>& subs, size_t idx,
                            int blanks_left, int tiles_left, Mode mode) {
  if (idx == comps.size()) return 1;
  const int size = static_cast<int>(comps[idx].size());
  BigCount total = 0;
  for (int kc = 0; kc <= std::min(blanks_left, size); ++kc) {
    int tc = size - kc;
    if (tc > tiles_left) continue;
    BigCount here = binomial(blanks_left, kc) * binomial(tiles_left, tc);
    here *= kc == 0 ? factorial(size) : count_connected(subs[idx], kc, mode);
    here *= count_disconnected(comps, subs, idx + 1, blanks_left - kc,
                               tiles_left - tc, mode);
    total += here;
  }
  return total;
}

}  // namespace

BigCount factorial(int n) {
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigCount count_components(const Graph& g, int k, Mode mode) {
  if (k < 1 || k > g.num_vertices()) {
    throw FormatError("count_components: need 1 <= k <= number of vertices");
  }
  if (is_connected(g)) return count_connected(g, k, mode);

  std::vector<std::vector<Vertex>> comps = connected_components(g);
  std::vector<Graph> subs;
  subs.reserve(comps.size());
  for (const auto& comp : comps) subs.push_back(induced_subgraph(g, comp));
  return count_disconnected(comps, subs, 0, k, g.num_vertices() - k, mode);
}

}  // namespace slidegraph
