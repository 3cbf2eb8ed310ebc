#include "slidegraph/solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slidegraph/counting.hpp"
#include "slidegraph/decomposition.hpp"
#include "slidegraph/oracle.hpp"

namespace slidegraph {

std::string solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved:
      return "SOLVED";
    case SolveStatus::kNotConnected:
      return "NOT_CONNECTED";
    case SolveStatus::kFallbackExceeded:
      return "FALLBACK_EXCEEDED";
  }
  return "?";
}

namespace {

// === working state ==========================================================

// Mutable board state that records every swap it performs, so each planner
// appends to one shared move log and always sees the live configuration.
struct Work {
  const Graph& g;
  Configuration cur;
  MoveSequence moves;

  Work(const Graph& graph, Configuration start)
      : g(graph), cur(std::move(start)) {}

  void emit(Vertex u, Vertex v) {
    cur = apply_swap(g, cur, u, v);
    moves.push_back({u, v});
  }

  int person_at(Vertex v) const { return cur.person_at[v]; }
  bool is_blank(Vertex v) const { return cur.is_blank_at(v); }

  Vertex find_person(int person) const {
    for (Vertex v = 0; v < cur.num_vertices(); ++v) {
      if (cur.person_at[v] == person) return v;
    }
    throw std::logic_error("solver: person is not on the board");
  }
};

// === movement primitives ====================================================

// Shortest path between two vertices avoiding `forbidden` cells, expanding
// sorted adjacency so routes are deterministic. Includes both endpoints.
std::optional<std::vector<Vertex>> bfs_path(const Graph& g, Vertex from,
                                            Vertex to,
                                            const std::vector<char>& forbidden) {
  if (forbidden[from] || forbidden[to]) return std::nullopt;
  if (from == to) return std::vector<Vertex>{from};
  std::vector<int> parent(g.num_vertices(), -2);
  parent[from] = -1;
  std::deque<Vertex> q{from};
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] != -2 || forbidden[w]) continue;
      parent[w] = v;
      if (w == to) {
        std::vector<Vertex> path{to};
        for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(w);
    }
  }
  return std::nullopt;
}

// Walks the blank occupying path.front() along the path, one swap per edge.
// Intermediate cells may hold tiles (they shift one step backward) or other
// blanks; every swap has the walking blank as an endpoint, so all are legal.
void walk_blank(Work& w, const std::vector<Vertex>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    assert(w.is_blank(path[i]));
    w.emit(path[i], path[i + 1]);
  }
}

// Brings the nearest blank to `target` without entering or disturbing
// `forbidden` cells. No-op when the target already holds a blank.
void ferry_blank_to(Work& w, Vertex target, std::vector<char> forbidden) {
  if (w.is_blank(target)) return;
  forbidden[target] = 0;
  std::vector<int> parent(w.g.num_vertices(), -2);
  parent[target] = -1;
  std::deque<Vertex> q{target};
  Vertex found = -1;
  while (!q.empty() && found < 0) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex x : w.g.neighbors(v)) {
      if (parent[x] != -2 || forbidden[x]) continue;
      parent[x] = v;
      if (w.is_blank(x)) {
        found = x;
        break;
      }
      q.push_back(x);
    }
  }
  if (found < 0) {
    throw std::logic_error("solver: no blank can reach a staging cell");
  }
  std::vector<Vertex> path;  // runs blank -> ... -> target by construction
  for (Vertex x = found; x != -1; x = parent[x]) path.push_back(x);
  walk_blank(w, path);
}

// Pushes the tile sitting on path.front() along the path one cell at a
// time; before each step a blank is ferried onto the next cell without
// passing through the tile, `tile_walls`, or `ferry_walls`.
void push_tile_along(Work& w, const std::vector<Vertex>& path,
                     const std::vector<char>& ferry_walls) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Vertex at = path[i], next = path[i + 1];
    std::vector<char> walls = ferry_walls;
    walls[at] = 1;
    ferry_blank_to(w, next, walls);
    w.emit(at, next);
  }
}


// === blank identity repair ==================================================

// Exchanges the ids of the two blanks at the endpoints of `path`, whose
// interior holds only tiles: the first blank tunnels through, swaps with
// the far blank, and backs out, restoring every interior tile exactly.
void transpose_blank_segment(Work& w, const std::vector<Vertex>& path) {
  std::size_t t = path.size() - 1;
  assert(t >= 1);
  assert(w.is_blank(path[0]) && w.is_blank(path[t]));
  for (std::size_t i = 0; i + 1 < t; ++i) w.emit(path[i], path[i + 1]);
  w.emit(path[t - 1], path[t]);
  for (std::size_t i = t - 1; i >= 1; --i) w.emit(path[i - 1], path[i]);
}

// Swaps the ids of the blanks at u and v, restoring everything else, by
// chaining segment transpositions across the blanks found on a shortest
// u-v path (conjugation: (s0 s1)(s1 s2)..(s_{r-2} s_{r-1})..(s1 s2)(s0 s1)
// exchanges the endpoint ids and fixes the stepping stones).
void transpose_blanks(Work& w, Vertex u, Vertex v) {
  if (u == v) return;
  assert(w.is_blank(u) && w.is_blank(v));
  std::vector<char> none(w.g.num_vertices(), 0);
  auto path = bfs_path(w.g, u, v, none);
  if (!path) {
    throw std::logic_error("solver: blanks lie in different graph components");
  }
  std::vector<std::size_t> stones;
  for (std::size_t i = 0; i < path->size(); ++i) {
    if (w.is_blank((*path)[i])) stones.push_back(i);
  }
  auto segment = [&](std::size_t a, std::size_t b) {
    std::vector<Vertex> seg(path->begin() + static_cast<long>(a),
                            path->begin() + static_cast<long>(b) + 1);
    transpose_blank_segment(w, seg);
  };
  std::size_t r = stones.size();
  assert(r >= 2);
  for (std::size_t i = 0; i + 1 < r; ++i) segment(stones[i], stones[i + 1]);
  for (std::size_t j = r - 1; j-- >= 2;) segment(stones[j - 1], stones[j]);
}

// Positions already match the target but blank ids may be permuted among
// the blank cells; repairs them in place.
void fix_blank_ids(Work& w, const Configuration& target) {
  for (Vertex v = 0; v < w.g.num_vertices(); ++v) {
    int want = target.person_at[v];
    if (want >= w.cur.k) continue;
    if (w.person_at(v) == want) continue;
    assert(w.is_blank(v));
    transpose_blanks(w, v, w.find_person(want));
  }
}

// === free sort: at most one tile ============================================

// With at most one tile every swap is legal, so people are walked home along
// a spanning tree, deepest target first: the walk for a cell only crosses
// strictly shallower cells, which are still unplaced.
void free_sort(Work& w, const Configuration& target) {
  int n = w.g.num_vertices();
  std::vector<int> parent(n, -2), depth(n, 0);
  parent[0] = -1;
  std::deque<Vertex> q{0};
  std::vector<Vertex> order;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    order.push_back(v);
    for (Vertex x : w.g.neighbors(v)) {
      if (parent[x] != -2) continue;
      parent[x] = v;
      depth[x] = depth[v] + 1;
      q.push_back(x);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::logic_error("solver: free sort needs a connected board");
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });

  auto tree_path = [&](Vertex a, Vertex b) {
    std::vector<Vertex> up_a, up_b;
    for (Vertex x = a; x != -1; x = parent[x]) up_a.push_back(x);
    for (Vertex x = b; x != -1; x = parent[x]) up_b.push_back(x);
    while (up_a.size() >= 2 && up_b.size() >= 2 &&
           up_a[up_a.size() - 1] == up_b[up_b.size() - 1] &&
           up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
      up_a.pop_back();
      up_b.pop_back();
    }
    std::vector<Vertex> path = up_a;  // ends at the meeting vertex
    for (std::size_t i = up_b.size() - 1; i-- > 0;) path.push_back(up_b[i]);
    return path;
  };

  for (Vertex v : order) {
    Vertex at = w.find_person(target.person_at[v]);
    if (at == v) continue;
    auto path = tree_path(at, v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      w.emit(path[i], path[i + 1]);
    }
  }
}

// === two tiles: plan over position pairs ====================================

// Exactly two tiles on the board, so every other cell is blank and each
// tile steps straight into any adjacent cell. Plans a breadth-first route
// over ordered position pairs, then repairs blank ids.
void two_tile_solve(Work& w, const Configuration& target) {
  int n = w.g.num_vertices();
  int k = w.cur.k;
  assert(n - k == 2);
  int x = k, y = k + 1;
  auto pack = [&](Vertex a, Vertex b) { return a * n + b; };
  Vertex sx = w.find_person(x), sy = w.find_person(y);
  Vertex gx = -1, gy = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (target.person_at[v] == x) gx = v;
    if (target.person_at[v] == y) gy = v;
  }
  assert(gx >= 0 && gy >= 0);
  int goal = pack(gx, gy);
  std::unordered_map<int, std::pair<int, Move>> parent;
  parent[pack(sx, sy)] = {-1, {-1, -1}};
  std::deque<int> q{pack(sx, sy)};
  while (!q.empty() && parent.find(goal) == parent.end()) {
    int s = q.front();
    q.pop_front();
    Vertex a = s / n, b = s % n;
    auto step = [&](Vertex na, Vertex nb, Vertex mu, Vertex mv) {
      int ns = pack(na, nb);
      if (parent.find(ns) != parent.end()) return;
      parent[ns] = {s, {mu, mv}};
      q.push_back(ns);
    };
    for (Vertex t : w.g.neighbors(a)) {
      if (t != b) step(t, b, a, t);
    }
    for (Vertex t : w.g.neighbors(b)) {
      if (t != a) step(a, t, b, t);
    }
  }
  if (parent.find(goal) == parent.end()) {
    throw std::logic_error("solver: tile pair has no route");
  }
  MoveSequence seq;
  for (int s = goal; parent[s].first != -1; s = parent[s].first) {
    seq.push_back(parent[s].second);
  }
  std::reverse(seq.begin(), seq.end());
  for (const Move& m : seq) {
    assert(w.is_blank(m.second));
    w.emit(m.first, m.second);
  }
  fix_blank_ids(w, target);
}

// === path boards ============================================================

// Returns the vertices of a path board end to end (smaller endpoint first),
// or nothing when the board is not a simple path.
std::optional<std::vector<Vertex>> detect_path_order(const Graph& g) {
  int n = g.num_vertices();
  if (n == 1) return std::vector<Vertex>{0};
  if (g.num_edges() != n - 1) return std::nullopt;
  std::vector<Vertex> ends;
  for (Vertex v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 0 || d > 2) return std::nullopt;
    if (d == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<Vertex> order{std::min(ends[0], ends[1])};
  Vertex prev = -1;
  while (static_cast<int>(order.size()) < n) {
    Vertex cur = order.back(), next = -1;
    for (Vertex x : g.neighbors(cur)) {
      if (x != prev) next = x;
    }
    if (next < 0) return std::nullopt;  // disconnected (edge count lied)
    prev = cur;
    order.push_back(next);
  }
  return order;
}

// Fills a path board left to right along `order`. A wanted blank walks
// left freely; a wanted tile is always the leftmost unplaced tile, so only
// blanks separate it from its cell and it slides left one swap per step.
// Also used on a ring once the tile words are rotation-aligned, with the
// wrap edge left unused.
void path_solve(Work& w, const std::vector<Vertex>& order,
                const Configuration& target) {
  int n = static_cast<int>(order.size());
  std::vector<int> slot(w.g.num_vertices(), -1);
  for (int i = 0; i < n; ++i) slot[order[i]] = i;
  std::vector<int> want_word, have_word;
  for (int i = 0; i < n; ++i) {
    if (target.person_at[order[i]] >= target.k) {
      want_word.push_back(target.person_at[order[i]]);
    }
    if (!w.is_blank(order[i])) have_word.push_back(w.person_at(order[i]));
  }
  if (want_word != have_word) {
    throw std::logic_error("solver: path tile orders differ");
  }
  for (int i = 0; i < n; ++i) {
    int p = target.person_at[order[i]];
    int j = slot[w.find_person(p)];
    assert(j >= i);
    while (j > i) {
      if (p >= w.cur.k) assert(w.is_blank(order[j - 1]));
      w.emit(order[j - 1], order[j]);
      --j;
    }
  }
}

// === ring boards ============================================================

// Returns the vertices of a cycle board in ring order starting at vertex 0
// toward its smaller neighbor, or nothing when the board is not a cycle.
std::optional<std::vector<Vertex>> detect_ring_order(const Graph& g) {
  int n = g.num_vertices();
  if (n < 3 || g.num_edges() != n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  std::vector<Vertex> ring{0};
  Vertex prev = -1;
  while (static_cast<int>(ring.size()) < n) {
    Vertex cur = ring.back(), next = -1;
    for (Vertex x : g.neighbors(cur)) {
      if (x != prev && (next < 0 || x < next)) next = x;
    }
    prev = cur;
    ring.push_back(next);
  }
  if (!g.has_edge(ring.back(), ring.front())) return std::nullopt;
  if (std::set<Vertex>(ring.begin(), ring.end()).size() != ring.size()) {
    return std::nullopt;  // two smaller cycles, not one ring
  }
  return ring;
}

// Rotates the whole ring content forward one position: some blank walks all
// the way around backward (ring.size()-1 swaps, every person shifts +1).
void ring_rotate_once(Work& w, const std::vector<Vertex>& ring) {
  int len = static_cast<int>(ring.size());
  int b = -1;
  for (int i = 0; i < len && b < 0; ++i) {
    if (w.is_blank(ring[i])) b = i;
  }
  if (b < 0) {
    throw std::logic_error("solver: ring rotation needs a blank on the ring");
  }
  for (int s = 0; s < len - 1; ++s) {
    int at = ((b - s) % len + len) % len;
    int to = ((b - s - 1) % len + len) % len;
    w.emit(ring[at], ring[to]);
  }
}

// Cycle board: rotates the content until the tile words align, then
// finishes as a path on the ring minus its wrap edge, which fixes exact
// positions and blank ids.
void cycle_solve(Work& w, const std::vector<Vertex>& ring,
                 const Configuration& target) {
  int len = static_cast<int>(ring.size());
  auto tile_word = [&](const std::vector<int>& people) {
    std::vector<int> word;
    for (int p : people) {
      if (p >= w.cur.k) word.push_back(p);
    }
    return word;
  };
  std::vector<int> cur_people(len), want_people(len);
  for (int i = 0; i < len; ++i) {
    cur_people[i] = w.person_at(ring[i]);
    want_people[i] = target.person_at[ring[i]];
  }
  std::vector<int> want_word = tile_word(want_people);
  int r = -1;
  for (int cand = 0; cand < len && r < 0; ++cand) {
    std::vector<int> rotated(len);
    for (int i = 0; i < len; ++i) {
      rotated[i] = cur_people[((i - cand) % len + len) % len];
    }
    if (tile_word(rotated) == want_word) r = cand;
  }
  if (r < 0) {
    throw std::logic_error("solver: ring tile words are not rotations");
  }
  for (int t = 0; t < r; ++t) ring_rotate_once(w, ring);
  path_solve(w, ring, target);
}

// === ring with pendant ("stopwatch" shape) ==================================

struct StopwatchShape {
  std::vector<Vertex> ring;  // hub first, walked toward its smaller neighbor
  Vertex crown = -1;         // the pendant cell
};

// Recognizes a ring with exactly one pendant cell attached to it.
std::optional<StopwatchShape> detect_stopwatch(const Graph& g) {
  int n = g.num_vertices();
  if (n < 4 || g.num_edges() != n) return std::nullopt;
  Vertex crown = -1, hub = -1;
  for (Vertex v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 1) {
      if (crown >= 0) return std::nullopt;
      crown = v;
    } else if (d == 3) {
      if (hub >= 0) return std::nullopt;
      hub = v;
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (crown < 0 || hub < 0 || !g.has_edge(hub, crown)) return std::nullopt;
  StopwatchShape shape;
  shape.crown = crown;
  shape.ring.push_back(hub);
  Vertex prev = -1;
  while (static_cast<int>(shape.ring.size()) < n - 1) {
    Vertex cur = shape.ring.back(), next = -1;
    for (Vertex x : g.neighbors(cur)) {
      if (x == prev || x == crown) continue;
      if (next < 0 || x < next) next = x;
    }
    if (next < 0) return std::nullopt;
    prev = cur;
    shape.ring.push_back(next);
  }
  if (!g.has_edge(shape.ring.back(), hub)) return std::nullopt;
  return shape;
}

// Ring-with-pendant board, k >= 2. Parks a blank on the crown, rebuilds the
// cyclic tile word by extracting one tile at a time into the crown and
// reinserting it right after its predecessor, loads the crown with its
// target occupant, and lets the ring finish as an exact cycle.
void stopwatch_solve(Work& w, const StopwatchShape& shape,
                     const Configuration& target) {
  const std::vector<Vertex>& ring = shape.ring;
  const Vertex crown = shape.crown;
  const Vertex hub = ring[0];
  const int len = static_cast<int>(ring.size());
  const int k = w.cur.k;
  assert(k >= 2);

  std::vector<int> idx(w.g.num_vertices(), -1);
  for (int i = 0; i < len; ++i) idx[ring[i]] = i;

  if (!w.is_blank(crown)) {
    ferry_blank_to(w, crown, std::vector<char>(w.g.num_vertices(), 0));
  }

  auto ring_index_of = [&](int person) { return idx[w.find_person(person)]; };
  auto rotate_ring = [&](int times) {
    for (int t = 0; t < times; ++t) ring_rotate_once(w, ring);
  };
  // Rotations needed to carry the content at ring index i onto the hub.
  auto shifts_to_hub = [&](int i) { return (len - i) % len; };

  auto cur_word = [&]() {
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      if (!w.is_blank(ring[i])) word.push_back(w.person_at(ring[i]));
    }
    return word;
  };
  auto is_rotation = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<int> d(a);
    d.insert(d.end(), a.begin(), a.end());
    return std::search(d.begin(), d.end(), b.begin(), b.end()) != d.end();
  };

  // Desired cyclic word: the crown's target tile (if any) followed by the
  // target ring word; extraction order then matches reading order.
  const int crown_target = target.person_at[crown];
  std::vector<int> want_word;
  if (crown_target >= k) want_word.push_back(crown_target);
  for (int i = 0; i < len; ++i) {
    int p = target.person_at[ring[i]];
    if (p >= k) want_word.push_back(p);
  }

  const int m = static_cast<int>(want_word.size());
  if (m >= 2 && !is_rotation(cur_word(), want_word)) {
    for (int i = 1; i < m; ++i) {
      int run_end = want_word[i - 1];
      int x = want_word[i];
      // Already the cyclic successor of the run? Then the run just grew.
      {
        int at = ring_index_of(run_end);
        int successor = -1;
        for (int s = 1; s <= len && successor < 0; ++s) {
          Vertex cell = ring[(at + s) % len];
          if (!w.is_blank(cell)) successor = w.person_at(cell);
        }
        if (successor == x) continue;
      }
      // Extract x through the crown (the crown holds a blank right now).
      rotate_ring(shifts_to_hub(ring_index_of(x)));
      w.emit(hub, crown);
      // Make sure the cell directly after run_end holds a blank, walking
      // one backward into place if needed: crossing tiles shifts them
      // without changing the word.
      int at = ring_index_of(run_end);
      if (!w.is_blank(ring[(at + 1) % len])) {
        int bidx = -1;
        for (int s = 2; s < len && bidx < 0; ++s) {
          if (w.is_blank(ring[(at + s) % len])) bidx = (at + s) % len;
        }
        if (bidx < 0) {
          throw std::logic_error("solver: no spare blank on the ring");
        }
        while (bidx != (at + 1) % len) {
          int prev = (bidx - 1 + len) % len;
          w.emit(ring[bidx], ring[prev]);
          bidx = prev;
        }
      }
      // Rotate that gap blank onto the hub and drop x back in: its word
      // predecessor is then exactly run_end.
      rotate_ring(shifts_to_hub((at + 1) % len));
      w.emit(hub, crown);
    }
  }

  // Load the crown with its target occupant.
  if (crown_target >= k) {
    rotate_ring(shifts_to_hub(ring_index_of(crown_target)));
    w.emit(hub, crown);
  } else if (w.person_at(crown) != crown_target) {
    // The wanted blank id sits on the ring: walk it round to the hub (tile
    // word unchanged) and exchange it with the crown's blank.
    int bi = ring_index_of(crown_target);
    while (bi != 0) {
      int prev = bi - 1;
      w.emit(ring[bi], ring[prev]);
      bi = prev;
    }
    w.emit(hub, crown);
  }

  // The ring now carries the target's cyclic tile word; finish exactly.
  cycle_solve(w, ring, target);
}

// === bounded bidirectional search ===========================================

std::string search_library_name(int n) {
  return "bounded search on a " + std::to_string(n) + "-cell piece";
}

long long saturated_count(const BigCount& c) {
  const long long big = std::numeric_limits<long long>::max();
  return c > big ? big : c.convert_to<long long>();
}

// Breadth-first search from both ends over Lehmer ranks; refuses boards
// whose full state space exceeds the cap before exploring anything.
MoveSequence bounded_search(const Graph& g, const Configuration& from,
                            const Configuration& to, long long cap) {
  int n = g.num_vertices();
  BigCount space = factorial(n);
  if (space > cap) {
    throw FallbackExceeded(search_library_name(n), saturated_count(space));
  }
  long long rf = rank_of(from), rb = rank_of(to);
  if (rf == rb) return {};

  struct Side {
    std::unordered_map<long long, std::pair<long long, Move>> parent;
    std::deque<long long> frontier;
  };
  Side fwd, bwd;
  fwd.parent[rf] = {-1, {-1, -1}};
  fwd.frontier.push_back(rf);
  bwd.parent[rb] = {-1, {-1, -1}};
  bwd.frontier.push_back(rb);

  // Moves from `r` back to the side's root, in chase order: applied as-is
  // they walk a state at `r` to the root (swaps are self-inverse).
  auto chain_to_root = [](Side& s, long long r) {
    MoveSequence seq;
    for (long long cur = r; s.parent[cur].first != -1;
         cur = s.parent[cur].first) {
      seq.push_back(s.parent[cur].second);
    }
    return seq;
  };

  long long explored = 2;
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    Side& mine = fwd.parent.size() <= bwd.parent.size() ? fwd : bwd;
    Side& other = (&mine == &fwd) ? bwd : fwd;
    std::deque<long long> next;
    for (long long r : mine.frontier) {
      Configuration c = configuration_of_rank(n, from.k, r);
      for (const Edge& e : g.edges()) {
        if (!c.is_blank_at(e.first) && !c.is_blank_at(e.second)) continue;
        long long nr = rank_of(apply_swap(g, c, e.first, e.second));
        if (mine.parent.find(nr) != mine.parent.end()) continue;
        mine.parent[nr] = {r, {e.first, e.second}};
        if (other.parent.find(nr) != other.parent.end()) {
          MoveSequence head = chain_to_root(fwd, nr);
          std::reverse(head.begin(), head.end());
          MoveSequence tail = chain_to_root(bwd, nr);
          head.insert(head.end(), tail.begin(), tail.end());
          return head;
        }
        next.push_back(nr);
        if (++explored > cap) {
          throw FallbackExceeded(search_library_name(n), cap);
        }
      }
    }
    mine.frontier.swap(next);
  }
  throw std::logic_error("solver: search exhausted the space without meeting");
}

// === block-tree trading =====================================================

MoveSequence plan_component(const Graph& g, const Configuration& from,
                            const Configuration& to, long long cap, int depth,
                            std::set<std::string>& notes);

// One balancing pass toward the party split: walks every blank out of the
// leaf interior, trades the leaf's wrong tiles for its missing ones, then
// stages blanks on the cut vertex and its smallest remainder neighbor.
// Updates `state` to the balanced configuration and returns the moves.
MoveSequence balance_toward_party(const Graph& g, Configuration& state,
                                  const BlockParty& party, long long cap) {
  Work w(g, state);
  const Vertex cut = party.cut_vertex;
  std::vector<char> in_leaf(g.num_vertices(), 0);
  for (Vertex v : party.leaf_block) in_leaf[v] = 1;

  // 1. Blanks leave the leaf interior. The preferred walk runs over tiles
  //    only and ends on a remainder-side tile, swapping the blank out for a
  //    tile (interior blank count strictly drops). When blanks crowd every
  //    such route, a loose walk to the nearest outside tile still pulls the
  //    tile frontier one cell closer, so bounded rounds always settle.
  //    Re-run before every trade, whose ferrying may strand a blank inside.
  auto interior_blank = [&]() -> Vertex {
    for (Vertex v : party.leaf_block) {
      if (v != cut && w.is_blank(v)) return v;
    }
    return -1;
  };
  auto exit_path = [&](Vertex b, bool tiles_only) -> std::vector<Vertex> {
    std::vector<int> parent(g.num_vertices(), -2);
    parent[b] = -1;
    std::deque<Vertex> q{b};
    Vertex exit = -1;
    while (!q.empty() && exit < 0) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex x : g.neighbors(v)) {
        if (parent[x] != -2 || (tiles_only && w.is_blank(x))) continue;
        parent[x] = v;
        if (!in_leaf[x] && !w.is_blank(x)) {
          exit = x;
          break;
        }
        q.push_back(x);
      }
    }
    std::vector<Vertex> path;
    for (Vertex x = exit; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());  // b -> ... -> exit, maybe empty
    return path;
  };
  auto evict_blanks = [&]() {
    int rounds = g.num_vertices() + w.cur.k + 4;
    for (int round = 0; round <= rounds; ++round) {
      Vertex b = interior_blank();
      if (b < 0) return;
      std::vector<Vertex> path = exit_path(b, true);
      if (path.empty()) path = exit_path(b, false);
      if (path.empty()) {
        throw std::logic_error("solver: leaf block has no exit");
      }
      walk_blank(w, path);
    }
    throw std::logic_error("solver: blank eviction failed to settle");
  };

  // 2. Trade until the leaf interior holds exactly the party's y_people.
  //    Each trade seats one more y-person and never unseats another, so the
  //    guard only fires if that invariant is somehow broken.
  std::vector<char> is_y(g.num_vertices(), 0);
  for (int p : party.y_people) is_y[p] = 1;
  auto in_interior = [&](Vertex v) { return in_leaf[v] && v != cut; };
  for (int guard = 0;; ++guard) {
    if (guard > static_cast<int>(party.y_people.size()) + 4) {
      throw std::logic_error("solver: trading loop failed to settle the leaf");
    }
    evict_blanks();
    int stray_y = -1;  // y-person waiting outside, smallest id first
    for (int p : party.y_people) {
      if (!in_interior(w.find_person(p))) {
        stray_y = p;
        break;
      }
    }
    if (stray_y < 0) break;
    int squatter = -1;  // smallest non-y person inside the leaf interior
    for (Vertex v : party.leaf_block) {
      if (!in_interior(v) || is_y[w.person_at(v)]) continue;
      if (squatter < 0 || w.person_at(v) < squatter) squatter = w.person_at(v);
    }
    if (squatter < 0 || squatter < w.cur.k || stray_y < w.cur.k) {
      throw std::logic_error("solver: trading pair is not two tiles");
    }
    MoveSequence t = trade(g, w.cur, party, stray_y, squatter, cap);
    for (const Move& m : t) w.emit(m.first, m.second);
  }

  // 3. Stage blanks at the cut vertex and its smallest remainder neighbor.
  std::vector<char> walls(g.num_vertices(), 0);
  for (Vertex v : party.leaf_block) {
    if (v != cut) walls[v] = 1;
  }
  Vertex nb = -1;
  for (Vertex v : g.neighbors(cut)) {
    if (!in_leaf[v]) {
      nb = v;
      break;
    }
  }
  if (nb < 0) throw std::logic_error("solver: cut vertex has no remainder side");
  ferry_blank_to(w, cut, walls);
  walls[cut] = 1;
  ferry_blank_to(w, nb, walls);

  state = w.cur;
  return w.moves;
}

// Relabels the people found on `cells` (same set in both configurations) to
// local ids, blanks first, and returns the two local configurations.
std::pair<Configuration, Configuration> localize(
    const Graph& g, const std::vector<Vertex>& cells, const Configuration& a,
    const Configuration& b) {
  std::vector<int> blanks, tiles;
  for (Vertex v : cells) {
    (a.is_blank_at(v) ? blanks : tiles).push_back(a.person_at[v]);
  }
  std::sort(blanks.begin(), blanks.end());
  std::sort(tiles.begin(), tiles.end());
  std::vector<int> local_id(g.num_vertices() + a.k, -1);
  for (std::size_t i = 0; i < blanks.size(); ++i) {
    local_id[static_cast<std::size_t>(blanks[i])] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    local_id[static_cast<std::size_t>(tiles[i])] =
        static_cast<int>(blanks.size() + i);
  }
  Configuration la, lb;
  la.k = lb.k = static_cast<int>(blanks.size());
  la.person_at.resize(cells.size());
  lb.person_at.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    la.person_at[i] = local_id[static_cast<std::size_t>(a.person_at[cells[i]])];
    lb.person_at[i] = local_id[static_cast<std::size_t>(b.person_at[cells[i]])];
    if (la.person_at[i] < 0 || lb.person_at[i] < 0) {
      throw std::logic_error("solver: sub-board people sets differ");
    }
  }
  return {la, lb};
}

// Multi-block board with k >= 2 and short hallways: balances both endpoint
// configurations toward the same party split, rebuilds the remainder side
// and then the leaf block (through a staged two-blank balloon), and undoes
// the target-side balancing.
MoveSequence plan_multiblock(const Graph& g, const Configuration& from,
                             const Configuration& to, long long cap, int depth,
                             std::set<std::string>& notes) {
  const int n = g.num_vertices();
  const int k = from.k;
  BlockCutTree bct = block_cut_tree(g);
  if (bct.blocks.size() < 2) {
    throw std::logic_error("solver: trading needs several blocks");
  }

  // Choose the leaf block with the smallest vertex id that supports the
  // cascade: enough tiles to staff its interior, room for every blank on
  // the remainder side, a trading tongue, and both sub-boards fully
  // mixable per the counting formula (the remainder with all k blanks,
  // the leaf balloon with the two staged ones).
  std::vector<Vertex> leaf;
  Vertex cut = -1;
  std::vector<Vertex> a_side;
  for (const auto& block : bct.blocks) {
    Vertex c = -1;
    int cuts = 0;
    for (Vertex v : block) {
      if (bct.is_cut(v)) {
        ++cuts;
        c = v;
      }
    }
    if (cuts != 1 || block.size() < 2) continue;
    if (!leaf.empty() && leaf[0] <= block[0]) continue;
    if (static_cast<int>(block.size()) - 1 > n - k) continue;
    std::vector<char> in_block(n, 0);
    for (Vertex v : block) in_block[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_block[v] || v == c) rest.push_back(v);
    }
    if (k > static_cast<int>(rest.size())) continue;
    if (count_components(induced_subgraph(g, rest), k) != 1) continue;
    Vertex nb = -1;
    for (Vertex v : g.neighbors(c)) {
      if (!in_block[v]) {
        nb = v;
        break;
      }
    }
    if (nb < 0) continue;
    std::vector<Vertex> balloon = block;
    balloon.push_back(nb);
    std::sort(balloon.begin(), balloon.end());
    if (count_components(induced_subgraph(g, balloon), 2) != 1) continue;
    if (!find_snake_tongue(g, rest, c, k)) continue;
    leaf = block;
    cut = c;
    a_side = rest;
  }
  if (cut < 0) {
    throw std::logic_error("solver: no tradable leaf block");
  }

  BlockParty party = make_block_party(g, k, leaf, cut);
  for (int p : party.y_people) {
    if (p < k) {
      throw std::logic_error("solver: not enough tiles to man the leaf block");
    }
  }

  Configuration s = from, t = to;
  MoveSequence opening = balance_toward_party(g, s, party, cap);
  MoveSequence closing = balance_toward_party(g, t, party, cap);

  Work w(g, s);

  // Rebuild the remainder side exactly as the balanced target has it.
  {
    Graph sub = induced_subgraph(g, a_side);
    auto [ls, lt] = localize(g, a_side, w.cur, t);
    MoveSequence sub_moves = plan_component(sub, ls, lt, cap, depth + 1, notes);
    for (const Move& m : sub_moves) {
      w.emit(a_side[m.first], a_side[m.second]);
    }
  }

  // Rebuild the leaf through its staged balloon: the leaf block plus the
  // remainder-side neighbor holding the second blank.
  {
    Vertex nb = -1;
    std::vector<char> in_leaf(n, 0);
    for (Vertex v : party.leaf_block) in_leaf[v] = 1;
    for (Vertex v : g.neighbors(cut)) {
      if (!in_leaf[v]) {
        nb = v;
        break;
      }
    }
    std::vector<Vertex> cells = party.leaf_block;
    cells.push_back(nb);
    std::sort(cells.begin(), cells.end());
    Graph sub = induced_subgraph(g, cells);
    auto [ls, lt] = localize(g, cells, w.cur, t);
    MoveSequence sub_moves = plan_component(sub, ls, lt, cap, depth + 1, notes);
    for (const Move& m : sub_moves) {
      w.emit(cells[m.first], cells[m.second]);
    }
  }

  // Undo the target-side balancing.
  for (auto it = closing.rbegin(); it != closing.rend(); ++it) {
    w.emit(it->first, it->second);
  }

  if (w.cur.person_at != to.person_at) {
    throw std::logic_error("solver: block trading missed the target");
  }
  MoveSequence out = std::move(opening);
  out.insert(out.end(), w.moves.begin(), w.moves.end());
  return out;
}

// === per-component dispatch =================================================

MoveSequence plan_component(const Graph& g, const Configuration& from,
                            const Configuration& to, long long cap, int depth,
                            std::set<std::string>& notes) {
  if (depth > 32) {
    throw std::logic_error("solver: trading recursion ran away");
  }
  const int n = g.num_vertices();
  const int k = from.k;
  if (from.person_at == to.person_at) return {};
  Work w(g, from);
  if (n - k <= 1) {
    notes.insert("free-sort");
    free_sort(w, to);
    return w.moves;
  }
  if (n - k == 2) {
    notes.insert("two-tile");
    two_tile_solve(w, to);
    return w.moves;
  }
  if (auto order = detect_path_order(g)) {
    notes.insert("path");
    path_solve(w, *order, to);
    return w.moves;
  }
  if (auto ring = detect_ring_order(g)) {
    notes.insert("ring");
    cycle_solve(w, *ring, to);
    return w.moves;
  }
  if (k >= 2) {
    if (auto shape = detect_stopwatch(g)) {
      notes.insert("pendant-ring");
      stopwatch_solve(w, *shape, to);
      return w.moves;
    }
    if (block_cut_tree(g).blocks.size() >= 2 && kappa(g) < k) {
      try {
        MoveSequence moves = plan_multiblock(g, from, to, cap, depth, notes);
        notes.insert("block-trades");
        return moves;
      } catch (const std::logic_error&) {
        // A constructive plan fell through; search still gives an answer
        // (or an honest refusal) below.
      }
    }
  }
  notes.insert("search");
  return bounded_search(g, from, to, cap);
}

}  // namespace

// === public operations ======================================================

BlockParty make_block_party(const Graph& g, int k,
                            const std::vector<Vertex>& leaf_block,
                            Vertex cut_vertex) {
  const int n = g.num_vertices();
  if (k < 1 || k > n) throw FormatError("make_block_party: bad blank count");
  if (leaf_block.size() < 2) {
    throw FormatError("make_block_party: leaf block needs at least two cells");
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : leaf_block) {
    if (v < 0 || v >= n || seen[v]) {
      throw FormatError("make_block_party: bad leaf block vertex list");
    }
    seen[v] = 1;
  }
  if (cut_vertex < 0 || cut_vertex >= n || !seen[cut_vertex]) {
    throw FormatError("make_block_party: cut vertex must lie in the block");
  }
  BlockParty party;
  party.leaf_block = leaf_block;
  std::sort(party.leaf_block.begin(), party.leaf_block.end());
  party.cut_vertex = cut_vertex;
  const int want_y = static_cast<int>(leaf_block.size()) - 1;
  for (int p = k; p < n && static_cast<int>(party.y_people.size()) < want_y;
       ++p) {
    party.y_people.push_back(p);  // smallest tiles staff the leaf interior
  }
  for (int b = k - 1;
       b >= 0 && static_cast<int>(party.y_people.size()) < want_y; --b) {
    party.y_people.push_back(b);  // blanks overflow in only when tiles ran out
  }
  std::sort(party.y_people.begin(), party.y_people.end());
  for (int p = 0; p < n; ++p) {
    if (!std::binary_search(party.y_people.begin(), party.y_people.end(), p)) {
      party.x_people.push_back(p);
    }
  }
  return party;
}

BalancedTarget check_balanced(const Graph& g, const Configuration& c,
                              const BlockParty& party) {
  validate_configuration(g, c);
  BalancedTarget r;
  r.party = party;
  std::vector<char> in_leaf(g.num_vertices(), 0);
  for (Vertex v : party.leaf_block) in_leaf[v] = 1;
  std::vector<char> is_y(g.num_vertices(), 0);
  for (int p : party.y_people) is_y[p] = 1;

  bool separated = true;
  bool no_interior_blank = true;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    bool interior = in_leaf[v] && v != party.cut_vertex;
    if (interior != static_cast<bool>(is_y[c.person_at[v]])) separated = false;
    if (interior && c.is_blank_at(v)) no_interior_blank = false;
  }
  r.people_separated = separated;
  r.no_blanks_in_leaf_interior = no_interior_blank;
  r.blank_on_cut = c.is_blank_at(party.cut_vertex);
  Vertex nb = -1;
  for (Vertex v : g.neighbors(party.cut_vertex)) {
    if (!in_leaf[v]) {
      nb = v;
      break;
    }
  }
  r.blank_on_remainder_neighbor = nb >= 0 && c.is_blank_at(nb);
  return r;
}

std::optional<std::vector<Vertex>> find_snake_tongue(
    const Graph& g, const std::vector<Vertex>& remainder_side,
    Vertex cut_vertex, int k) {
  std::vector<char> in_a(g.num_vertices(), 0);
  for (Vertex v : remainder_side) {
    if (v < 0 || v >= g.num_vertices()) {
      throw FormatError("find_snake_tongue: bad remainder vertex");
    }
    in_a[v] = 1;
  }
  if (cut_vertex < 0 || cut_vertex >= g.num_vertices() || !in_a[cut_vertex]) {
    throw FormatError(
        "find_snake_tongue: cut vertex must belong to the remainder side");
  }
  Vertex mouth = -1;  // smallest leaf-side neighbor of the cut vertex
  for (Vertex v : g.neighbors(cut_vertex)) {
    if (!in_a[v]) {
      mouth = v;
      break;
    }
  }
  if (mouth < 0) return std::nullopt;

  auto deg_a = [&](Vertex v) {
    int d = 0;
    for (Vertex x : g.neighbors(v)) {
      if (in_a[x]) ++d;
    }
    return d;
  };

  // Nearest branching vertex inside the remainder side; the cut vertex
  // itself branches when two remainder edges leave it.
  std::vector<int> parent(g.num_vertices(), -2);
  parent[cut_vertex] = -1;
  std::deque<Vertex> q{cut_vertex};
  Vertex branch = deg_a(cut_vertex) >= 2 ? cut_vertex : -1;
  while (branch < 0 && !q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex x : g.neighbors(v)) {
      if (!in_a[x] || parent[x] != -2) continue;
      parent[x] = v;
      if (deg_a(x) >= 3) {
        branch = x;
        break;
      }
      q.push_back(x);
    }
  }
  if (branch < 0) return std::nullopt;

  std::vector<Vertex> spine;  // cut vertex ... branch
  for (Vertex v = branch; v != -1; v = parent[v]) spine.push_back(v);
  std::reverse(spine.begin(), spine.end());

  std::vector<char> used(g.num_vertices(), 0);
  used[mouth] = 1;
  for (Vertex v : spine) used[v] = 1;
  std::vector<Vertex> tips;
  for (Vertex v : g.neighbors(branch)) {
    if (in_a[v] && !used[v]) tips.push_back(v);
    if (tips.size() == 2) break;
  }
  if (tips.size() < 2) return std::nullopt;

  std::vector<Vertex> tongue{mouth};
  tongue.insert(tongue.end(), spine.begin(), spine.end());
  tongue.push_back(tips[0]);
  tongue.push_back(tips[1]);
  if (static_cast<int>(tongue.size()) > k + 2) {
    return std::nullopt;  // hallway too long for the blank supply
  }
  return tongue;
}

MoveSequence trade(const Graph& g, const Configuration& c,
                   const BlockParty& party, int x, int y, long long cap) {
  (void)cap;
  validate_configuration(g, c);
  const int n = g.num_vertices();
  const int k = c.k;
  if (k < 2) throw FormatError("trade: needs at least two blanks");
  if (x < k || x >= n || y < k || y >= n || x == y) {
    throw FormatError("trade: x and y must be two distinct tiles");
  }
  std::vector<char> in_leaf(n, 0);
  for (Vertex v : party.leaf_block) in_leaf[v] = 1;
  const Vertex cut = party.cut_vertex;
  if (cut < 0 || cut >= n || !in_leaf[cut]) {
    throw FormatError("trade: party's cut vertex must lie in its leaf block");
  }

  Work w(g, c);
  Vertex px = w.find_person(x), py = w.find_person(y);
  if (in_leaf[px] && px != cut) {
    throw FormatError("trade: x must start on the remainder side");
  }
  if (!in_leaf[py] || py == cut) {
    throw FormatError("trade: y must start inside the leaf block");
  }

  std::vector<Vertex> a_side;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_leaf[v] || v == cut) a_side.push_back(v);
  }
  auto tongue_opt = find_snake_tongue(g, a_side, cut, k);
  if (!tongue_opt) {
    throw std::logic_error("solver: no trading tongue on the remainder side");
  }
  const std::vector<Vertex>& tongue = *tongue_opt;
  const int m = static_cast<int>(tongue.size());
  const Vertex mouth = tongue[0];
  const Vertex far_tip = tongue[m - 1];

  // Tiles already in the party's y set stay put for the whole trade, so a
  // sequence of trades settles the leaf one tile at a time.
  std::vector<char> resident(n, 0);
  for (int p : party.y_people) {
    if (p != x && p != y) resident[w.find_person(p)] = 1;
  }

  // 1. y drives to the leaf-side mouth; its path stays inside the leaf but
  //    ferry blanks may come through the cut vertex.
  {
    std::vector<char> tile_walls(n, 1);
    for (Vertex v : party.leaf_block) tile_walls[v] = 0;
    tile_walls[cut] = 1;  // y stays off the cut vertex
    for (Vertex v = 0; v < n; ++v) tile_walls[v] |= resident[v];
    auto path = bfs_path(g, py, mouth, tile_walls);
    if (!path) throw std::logic_error("solver: leaf path is walled off");
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
      std::vector<char> ferry_walls = resident;
      ferry_walls[(*path)[i]] = 1;
      ferry_blank_to(w, (*path)[i + 1], ferry_walls);
      w.emit((*path)[i], (*path)[i + 1]);
    }
  }

  // 2. A blank parks on the far fork tip first — its cell may be a dead end
  //    whose only approach is the path x itself will take.
  std::vector<char> leaf_walls = resident;
  for (Vertex v : party.leaf_block) {
    if (v != cut) leaf_walls[v] = 1;
  }
  if (w.find_person(x) != far_tip) {
    std::vector<char> walls = leaf_walls;
    walls[w.find_person(x)] = 1;
    ferry_blank_to(w, far_tip, walls);
  }

  // 3. x drives to the far fork tip, keeping out of the leaf interior and
  //    never displacing the blank waiting there.
  {
    std::vector<char> walls = leaf_walls;
    walls[far_tip] = 1;  // ferries keep off the waiting blank ...
    Vertex at = w.find_person(x);
    if (at != far_tip) {
      auto path = bfs_path(g, at, far_tip, leaf_walls);
      if (!path) throw std::logic_error("solver: routing path is walled off");
      push_tile_along(w, *path, walls);  // ... the final hop finds it ready
    }
  }

  // 4. Saturate the rest of the tongue with blanks, cut vertex outward: a
  //    balanced start already holds blanks there, and evictions drain
  //    toward the still-open far side of the remainder.
  std::vector<char> parked = resident;
  parked[far_tip] = 1;
  parked[mouth] = 1;
  for (int i = 1; i <= m - 2; ++i) {
    Vertex cell = tongue[i];
    ferry_blank_to(w, cell, parked);
    parked[cell] = 1;
  }

  // 5. Exchange x and y over the blank tongue, then restore blank ids so
  //    the net effect is exactly the two tiles swapping cells.
  Configuration want = w.cur;
  std::swap(want.person_at[far_tip], want.person_at[mouth]);
  {
    std::vector<char> on_tongue(n, 0);
    for (Vertex v : tongue) on_tongue[v] = 1;
    auto pack = [&](Vertex a, Vertex b) { return a * n + b; };
    int goal = pack(mouth, far_tip);  // (pos of x, pos of y)
    std::unordered_map<int, std::pair<int, Move>> parent;
    parent[pack(far_tip, mouth)] = {-1, {-1, -1}};
    std::deque<int> bq{pack(far_tip, mouth)};
    while (!bq.empty() && parent.find(goal) == parent.end()) {
      int s = bq.front();
      bq.pop_front();
      Vertex a = s / n, b = s % n;
      auto step = [&](Vertex na, Vertex nb, Vertex mu, Vertex mv) {
        int ns = pack(na, nb);
        if (parent.find(ns) != parent.end()) return;
        parent[ns] = {s, {mu, mv}};
        bq.push_back(ns);
      };
      for (Vertex v : g.neighbors(a)) {
        if (on_tongue[v] && v != b) step(v, b, a, v);
      }
      for (Vertex v : g.neighbors(b)) {
        if (on_tongue[v] && v != a) step(a, v, b, v);
      }
    }
    if (parent.find(goal) == parent.end()) {
      throw std::logic_error("solver: tongue exchange has no route");
    }
    MoveSequence seq;
    for (int s = goal; parent[s].first != -1; s = parent[s].first) {
      seq.push_back(parent[s].second);
    }
    std::reverse(seq.begin(), seq.end());
    for (const Move& mv : seq) w.emit(mv.first, mv.second);
  }
  fix_blank_ids(w, want);
  if (w.cur.person_at != want.person_at) {
    throw std::logic_error("solver: trade missed its target");
  }
  return w.moves;
}

MoveSequence stopwatch_permute(const Graph& board, const Configuration& c,
                               const Configuration& target) {
  validate_configuration(board, c);
  validate_configuration(board, target);
  if (c.k != target.k) {
    throw FormatError("stopwatch_permute: blank counts differ");
  }
  if (c.k < 2) {
    throw FormatError("stopwatch_permute: needs at least two blanks");
  }
  auto shape = detect_stopwatch(board);
  if (!shape) {
    throw FormatError("stopwatch_permute: board is not a ring with a pendant");
  }
  Work w(board, c);
  stopwatch_solve(w, *shape, target);
  if (w.cur.person_at != target.person_at) {
    throw std::logic_error("solver: pendant-ring rebuild missed the target");
  }
  return w.moves;
}

MoveSequence snake_exchange(const Graph& board, const Configuration& c, int x,
                            int y) {
  validate_configuration(board, c);
  const int n = board.num_vertices();
  if (n - c.k != 2) {
    throw FormatError("snake_exchange: needs exactly two tiles");
  }
  Classification cls = classify(board);
  int leaves = 0, forks = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (board.degree(v) == 1) ++leaves;
    if (board.degree(v) >= 3) ++forks;
  }
  if (!cls.tree || leaves != 3 || forks != 1) {
    throw FormatError("snake_exchange: board must be a three-leaf tree");
  }
  if (x == y) return {};
  if (std::minmax(x, y) != std::minmax(c.k, c.k + 1)) {
    throw FormatError("snake_exchange: x and y must be the two tiles");
  }
  Configuration target = c;
  Vertex px = -1, py = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (c.person_at[v] == x) px = v;
    if (c.person_at[v] == y) py = v;
  }
  std::swap(target.person_at[px], target.person_at[py]);
  Work w(board, c);
  two_tile_solve(w, target);
  if (w.cur.person_at != target.person_at) {
    throw std::logic_error("solver: tile exchange missed the target");
  }
  return w.moves;
}

MoveSequence balloon_reconfigure(const Graph& board, const Configuration& c,
                                 const Configuration& target, long long cap) {
  validate_configuration(board, c);
  validate_configuration(board, target);
  if (c.k != target.k) {
    throw FormatError("balloon_reconfigure: blank counts differ");
  }
  if (c.k < 2) {
    throw FormatError("balloon_reconfigure: needs at least two blanks");
  }
  if (!is_connected(board)) {
    throw FormatError("balloon_reconfigure: board must be connected");
  }
  Verdict v = decide(board, c, target);
  if (!v.connected) {
    throw FormatError("balloon_reconfigure: target is not reachable (" +
                      v.detail + ")");
  }
  std::set<std::string> notes;
  MoveSequence moves = plan_component(board, c, target, cap, 0, notes);
  if (replay(board, c, moves).person_at != target.person_at) {
    throw std::logic_error("solver: piece rebuild missed the target");
  }
  return moves;
}

SolveOutcome solve(const Graph& g, const Configuration& from,
                   const Configuration& to, long long cap) {
  validate_configuration(g, from);
  validate_configuration(g, to);
  if (from.k != to.k) {
    throw FormatError("solve: configurations have different blank counts");
  }
  SolveOutcome out;
  out.verdict = decide(g, from, to);
  if (!out.verdict.connected) {
    out.status = SolveStatus::kNotConnected;
    return out;
  }

  std::set<std::string> notes;
  try {
    MoveSequence all;
    for (const auto& comp : connected_components(g)) {
      int blanks = 0;
      bool differs = false;
      for (Vertex v : comp) {
        if (from.is_blank_at(v)) ++blanks;
        if (from.person_at[v] != to.person_at[v]) differs = true;
      }
      if (!differs || blanks == 0) continue;  // nothing to move here
      Graph sub = induced_subgraph(g, comp);
      auto [ls, lt] = localize(g, comp, from, to);
      MoveSequence sub_moves = plan_component(sub, ls, lt, cap, 0, notes);
      for (const Move& m : sub_moves) {
        all.push_back({comp[m.first], comp[m.second]});
      }
    }
    if (replay(g, from, all).person_at != to.person_at) {
      throw std::logic_error("solver: move sequence fails its replay check");
    }
    out.status = SolveStatus::kSolved;
    out.moves = std::move(all);
    std::string joined;
    for (const std::string& s : notes) {
      if (!joined.empty()) joined += ",";
      joined += s;
    }
    out.note = joined;
  } catch (const FallbackExceeded& fe) {
    out.status = SolveStatus::kFallbackExceeded;
    out.library = fe.library;
    out.state_bound = fe.bound;
  }
  return out;
}

}  // namespace slidegraph
