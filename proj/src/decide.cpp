#include "slidegraph/decide.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "slidegraph/circles.hpp"
#include "slidegraph/decomposition.hpp"
#include "slidegraph/oracle.hpp"
#include "slidegraph/presets.hpp"

namespace slidegraph {
namespace {

std::string vertex_list_string(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out << ",";
    out << vs[i];
  }
  out << "}";
  return out.str();
}

// BFS distances from src, optionally treating some vertices as walls
// (the source itself is never a wall). Unreachable = -1.
std::vector<int> bfs_distances(const Graph& g, Vertex src,
                               const std::vector<char>& wall) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != -1 || wall[w]) continue;
      dist[w] = dist[v] + 1;
      q.push(w);
    }
  }
  return dist;
}

// Shortest path src -> dst consistent with the given BFS distances
// (deterministic: each step picks the smallest-id predecessor).
std::vector<Vertex> path_from_distances(const Graph& g, Vertex src, Vertex dst,
                                        const std::vector<int>& dist) {
  assert(dist[dst] >= 0);
  std::vector<Vertex> rev{dst};
  Vertex cur = dst;
  while (cur != src) {
    Vertex prev = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        prev = w;
        break;  // neighbors are sorted, so this is the smallest choice
      }
    }
    assert(prev != -1);
    rev.push_back(prev);
    cur = prev;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Permutation sign via cycle decomposition: true = even.
bool permutation_is_even(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int transpositions = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool rotation_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<int> doubled(a);
  doubled.insert(doubled.end(), a.begin(), a.end());
  auto it = std::search(doubled.begin(), doubled.end(), b.begin(), b.end());
  return it != doubled.end();
}

// Vertices of a cycle graph in a fixed traversal order: start at the
// smallest vertex and step to its smaller neighbor first. Both
// configurations get the same orientation, so rotation (not reflection)
// is the right equivalence for the tile words read along it.
std::vector<Vertex> ring_order(const Graph& g) {
  std::vector<Vertex> order{0};
  Vertex prev = 0;
  Vertex cur = g.neighbors(0).front();
  while (cur != 0) {
    order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

std::vector<int> tile_word_on_ring(const Configuration& c,
                                   const std::vector<Vertex>& ring) {
  std::vector<int> word;
  for (Vertex v : ring) {
    if (!c.is_blank_at(v)) word.push_back(c.person_at[v]);
  }
  return word;
}

// --- theta0 class machinery -------------------------------------------

// Lazily built class table for the canonical one-blank theta0 board:
// entry r is the class id of the configuration with rank r.
const std::vector<int>& theta0_class_table() {
  static const std::vector<int> table = [] {
    OracleResult res = enumerate_components(theta0_graph(), 1);
    return res.component_of;
  }();
  return table;
}

// Maps an arbitrary theta0-shaped graph onto theta0_graph(): hubs are the
// degree-3 vertices, the one-interior chain lands on vertex 6, the two
// two-interior chains land on (1,2) and (5,4) walking away from the
// smaller hub. Any fixed choice works because both configurations of a
// decide query are mapped through the same function.
std::vector<Vertex> theta0_isomorphism(const Graph& g) {
  assert(g.num_vertices() == 7 && g.num_edges() == 8);
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 3) hubs.push_back(v);
  }
  assert(hubs.size() == 2);
  Vertex ha = hubs[0], hb = hubs[1];

  // Walk the three hub-to-hub chains starting from ha.
  std::vector<std::vector<Vertex>> chains;  // interiors only, in walk order
  for (Vertex start : g.neighbors(ha)) {
    std::vector<Vertex> interior;
    Vertex prev = ha, cur = start;
    while (cur != hb) {
      interior.push_back(cur);
      const auto& nb = g.neighbors(cur);
      Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    chains.push_back(std::move(interior));
  }
  std::sort(chains.begin(), chains.end(),
            [](const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x.front() < y.front();
            });
  assert(chains[0].size() == 1 && chains[1].size() == 2 &&
         chains[2].size() == 2);

  std::vector<Vertex> to_canonical(7, -1);
  to_canonical[ha] = 0;
  to_canonical[hb] = 3;
  to_canonical[chains[0][0]] = 6;
  to_canonical[chains[1][0]] = 1;
  to_canonical[chains[1][1]] = 2;
  to_canonical[chains[2][0]] = 5;
  to_canonical[chains[2][1]] = 4;
  return to_canonical;
}

// Class of a one-blank configuration on any theta0-shaped board. Tiles are
// compared by relative order, so both sides of a query must carry the same
// tile ids (guaranteed after the people-set check).
int theta0_class_mapped(const Graph& g, const Configuration& c) {
  std::vector<Vertex> phi = theta0_isomorphism(g);
  // Compress tile ids to 1..6 by ascending id; the blank becomes 0.
  std::vector<int> tiles;
  for (int p : c.person_at) {
    if (p >= c.k) tiles.push_back(p);
  }
  std::sort(tiles.begin(), tiles.end());
  Configuration canon;
  canon.k = 1;
  canon.person_at.assign(7, -1);
  for (Vertex v = 0; v < 7; ++v) {
    int p = c.person_at[v];
    if (p < c.k) {
      canon.person_at[phi[v]] = 0;
    } else {
      int idx = static_cast<int>(std::lower_bound(tiles.begin(), tiles.end(),
                                                  p) -
                                 tiles.begin());
      canon.person_at[phi[v]] = 1 + idx;
    }
  }
  return theta0_class_table()[static_cast<size_t>(rank_of(canon))];
}

// --- per-circle comparison --------------------------------------------

// Reassigns blank ids so blanks are numbered 0..k-1 in ascending vertex
// order. After both configurations are parked on the same anchors this
// makes their blank placements literally identical, leaving only tiles
// to compare.
Configuration canonicalize_blank_ids(const Configuration& c) {
  Configuration out = c;
  int next = 0;
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    if (c.is_blank_at(v)) out.person_at[v] = next++;
  }
  assert(next == c.k);
  return out;
}

struct CircleCheck {
  bool ok = true;
  VerdictReason reason = VerdictReason::kConnected;
  std::string detail;
};

CircleCheck check_circle(const Graph& g, const Circle& circle,
                         const Configuration& a, const Configuration& b) {
  CircleCheck res;
  auto fail = [&](VerdictReason r, const std::string& what) {
    res.ok = false;
    res.reason = r;
    res.detail = "circle " + vertex_list_string(circle.vertices) + ": " + what;
  };

  Configuration pa = canonicalize_blank_ids(
      normalize(g, a, circle.anchors).first);
  Configuration pb = canonicalize_blank_ids(
      normalize(g, b, circle.anchors).first);

  std::vector<int> people_a, people_b;
  for (Vertex v : circle.vertices) {
    people_a.push_back(pa.person_at[v]);
    people_b.push_back(pb.person_at[v]);
  }
  {
    auto sa = people_a, sb = people_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      fail(VerdictReason::kPeopleSetMismatch, "different people occupy it");
      return res;
    }
  }

  Graph sub = induced_subgraph(g, circle.vertices);
  Classification cls = classify(sub);
  int k_local = static_cast<int>(circle.anchors.size());

  // Local copies of the parked configurations on the circle's vertices
  // (people keep their global ids; only positions are relabeled).
  Configuration la, lb;
  la.k = lb.k = k_local;
  la.person_at = people_a;
  lb.person_at = people_b;

  if (cls.is_cycle) {
    std::vector<Vertex> ring = ring_order(sub);
    if (!rotation_equivalent(tile_word_on_ring(la, ring),
                             tile_word_on_ring(lb, ring))) {
      fail(VerdictReason::kCyclicOrderMismatch,
           "tiles sit in a different rotational order");
    }
    return res;
  }

  if (k_local == 1 && cls.is_theta0) {
    if (theta0_class_mapped(sub, la) != theta0_class_mapped(sub, lb)) {
      fail(VerdictReason::kTheta0ClassMismatch,
           "configurations lie in different classes of the board");
    }
    return res;
  }

  if (k_local == 1 && cls.bipartite) {
    // perm[i] = position of a's person (from circle position i) within b.
    std::vector<int> where_b(pa.num_vertices() + k_local, -1);
    for (size_t j = 0; j < people_b.size(); ++j) {
      where_b[static_cast<size_t>(people_b[j])] = static_cast<int>(j);
    }
    std::vector<int> perm(people_a.size());
    for (size_t i = 0; i < people_a.size(); ++i) {
      perm[i] = where_b[static_cast<size_t>(people_a[i])];
    }
    if (!permutation_is_even(perm)) {
      fail(VerdictReason::kParityMismatch,
           "tiles differ by an odd permutation");
    }
    return res;
  }

  return res;  // every remaining circle kind is fully mixable
}

}  // namespace

std::string verdict_reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::kConnected:
      return "CONNECTED";
    case VerdictReason::kPeopleSetMismatch:
      return "PEOPLE_SET_MISMATCH";
    case VerdictReason::kExactMismatch:
      return "EXACT_MISMATCH";
    case VerdictReason::kCyclicOrderMismatch:
      return "CYCLIC_ORDER_MISMATCH";
    case VerdictReason::kParityMismatch:
      return "PARITY_MISMATCH";
    case VerdictReason::kTheta0ClassMismatch:
      return "THETA0_CLASS_MISMATCH";
  }
  return "UNKNOWN";
}

std::pair<Configuration, MoveSequence> normalize(
    const Graph& g, const Configuration& c,
    const std::vector<Vertex>& anchors) {
  validate_configuration(g, c);
  if (static_cast<int>(anchors.size()) != c.k) {
    throw FormatError("normalize: need exactly one anchor per blank");
  }
  std::vector<char> is_anchor(g.num_vertices(), 0);
  for (Vertex a : anchors) {
    if (a < 0 || a >= g.num_vertices()) {
      throw FormatError("normalize: anchor out of range");
    }
    if (is_anchor[a]) throw FormatError("normalize: duplicate anchor");
    is_anchor[a] = 1;
  }

  Configuration cur = c;
  MoveSequence moves;
  const int iteration_cap = c.k * g.num_vertices() + g.num_vertices() + 16;
  int iterations = 0;

  while (true) {
    if (++iterations > iteration_cap) {
      throw std::logic_error("normalize: blank parking failed to converge");
    }

    std::vector<Vertex> unoccupied;
    for (Vertex a : anchors) {
      if (!cur.is_blank_at(a)) unoccupied.push_back(a);
    }
    if (unoccupied.empty()) break;
    std::sort(unoccupied.begin(), unoccupied.end());

    std::vector<char> free_blank(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (cur.is_blank_at(v) && !is_anchor[v]) free_blank[v] = 1;
    }

    // Anchors already holding a blank act as walls so parked blanks stay
    // parked; if that leaves no blank reachable, fall back to open routing
    // (role exchanges along the walk keep it legal anyway).
    std::vector<char> walls(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (is_anchor[v] && cur.is_blank_at(v)) walls[v] = 1;
    }

    struct Pick {
      int dist;
      Vertex anchor;
      Vertex blank;
    };
    std::optional<Pick> best;
    std::vector<int> best_dist_map;
    for (int pass = 0; pass < 2 && !best; ++pass) {
      std::vector<char> no_walls(g.num_vertices(), 0);
      for (Vertex u : unoccupied) {
        walls[u] = 0;  // the target anchor itself is always enterable
        std::vector<int> dist =
            bfs_distances(g, u, pass == 0 ? walls : no_walls);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          if (!free_blank[v] || dist[v] < 0) continue;
          if (!best || dist[v] < best->dist ||
              (dist[v] == best->dist &&
               (u < best->anchor || (u == best->anchor && v < best->blank)))) {
            best = Pick{dist[v], u, v};
            best_dist_map = dist;
          }
        }
      }
    }
    if (!best) {
      throw FormatError("normalize: no blank can reach an empty anchor");
    }

    std::vector<Vertex> path =
        path_from_distances(g, best->anchor, best->blank, best_dist_map);
    std::reverse(path.begin(), path.end());  // now blank -> anchor
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      Vertex at = path[i], to = path[i + 1];
      assert(cur.is_blank_at(at));
      if (cur.is_blank_at(to)) continue;  // role exchange: walker swaps ids
      cur = apply_swap(g, cur, at, to);
      moves.emplace_back(at, to);
    }
  }
  return {cur, moves};
}

Verdict decide(const Graph& g, const Configuration& a,
               const Configuration& b) {
  validate_configuration(g, a);
  validate_configuration(g, b);
  if (a.k != b.k) {
    throw FormatError("decide: configurations have different blank counts");
  }

  Verdict verdict;
  verdict.connected = true;

  for (const auto& comp : connected_components(g)) {
    std::vector<int> people_a, people_b;
    int blanks_a = 0, blanks_b = 0;
    for (Vertex v : comp) {
      people_a.push_back(a.person_at[v]);
      people_b.push_back(b.person_at[v]);
      if (a.is_blank_at(v)) ++blanks_a;
      if (b.is_blank_at(v)) ++blanks_b;
    }
    {
      auto sa = people_a, sb = people_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        verdict.connected = false;
        verdict.reason = VerdictReason::kPeopleSetMismatch;
        verdict.detail = "component " + vertex_list_string(comp) +
                         ": different people occupy it";
        return verdict;
      }
    }
    assert(blanks_a == blanks_b);
    (void)blanks_b;

    if (blanks_a == 0) {
      if (people_a != people_b) {
        verdict.connected = false;
        verdict.reason = VerdictReason::kExactMismatch;
        verdict.detail = "component " + vertex_list_string(comp) +
                         ": no blank, so nothing can move";
        return verdict;
      }
      continue;
    }

    // Relabel the component's people to local ids, blanks first. The two
    // configurations hold the same people here, so the sorted order gives
    // both the same relabeling.
    Graph sub = induced_subgraph(g, comp);
    std::vector<int> blanks, tiles;
    for (int p : people_a) {
      (p < a.k ? blanks : tiles).push_back(p);
    }
    std::sort(blanks.begin(), blanks.end());
    std::sort(tiles.begin(), tiles.end());
    std::vector<int> local_id(static_cast<size_t>(g.num_vertices() + a.k), -1);
    for (size_t i = 0; i < blanks.size(); ++i) {
      local_id[static_cast<size_t>(blanks[i])] = static_cast<int>(i);
    }
    for (size_t i = 0; i < tiles.size(); ++i) {
      local_id[static_cast<size_t>(tiles[i])] =
          static_cast<int>(blanks.size() + i);
    }
    Configuration ca, cb;
    ca.k = cb.k = blanks_a;
    ca.person_at.resize(comp.size());
    cb.person_at.resize(comp.size());
    for (size_t i = 0; i < comp.size(); ++i) {
      ca.person_at[i] = local_id[static_cast<size_t>(people_a[i])];
      cb.person_at[i] = local_id[static_cast<size_t>(people_b[i])];
    }

    for (const Circle& circle : social_circles(sub, blanks_a)) {
      CircleCheck check = check_circle(sub, circle, ca, cb);
      if (!check.ok) {
        verdict.connected = false;
        verdict.reason = check.reason;
        verdict.detail = "component " + vertex_list_string(comp) + ", " +
                         check.detail;
        return verdict;
      }
    }
  }
  return verdict;
}

int theta0_class(const Configuration& c) {
  Graph g = theta0_graph();
  validate_configuration(g, c);
  if (c.k != 1) {
    throw FormatError("theta0_class: exactly one blank required");
  }
  return theta0_class_mapped(g, c);
}

}  // namespace slidegraph
