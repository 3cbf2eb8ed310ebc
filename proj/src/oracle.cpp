#include "slidegraph/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

namespace slidegraph {

namespace {

constexpr int kMaxFactorialN = 20;

const std::array<long long, kMaxFactorialN + 1>& factorials() {
  static const auto table = [] {
    std::array<long long, kMaxFactorialN + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kMaxFactorialN; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

long long rank_of_permutation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  long long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += smaller * factorials()[n - 1 - i];
  }
  return rank;
}

std::vector<int> permutation_of_rank(int n, long long rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> perm;
  perm.reserve(n);
  for (int i = 0; i < n; ++i) {
    long long f = factorials()[n - 1 - i];
    int idx = static_cast<int>(rank / f);
    rank %= f;
    perm.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return perm;
}

}  // namespace

long long rank_of(const Configuration& c) {
  return rank_of_permutation(c.person_at);
}

Configuration configuration_of_rank(int n, int k, long long rank) {
  Configuration c;
  c.k = k;
  c.person_at = permutation_of_rank(n, rank);
  return c;
}

OracleResult enumerate_components(const Graph& g, int k, long long cap) {
  int n = g.num_vertices();
  if (k < 1 || k > n)
    throw FormatError("blank count k=" + std::to_string(k) + " out of range");
  if (n > kMaxFactorialN || factorials()[n] > cap)
    throw CapError("state space " + std::to_string(n) +
                   "! exceeds oracle cap " + std::to_string(cap));
  long long total = factorials()[n];

  OracleResult res;
  res.num_states = total;
  res.component_of.assign(total, -1);

  std::vector<int> state(n);
  std::vector<int> work;
  for (long long start = 0; start < total; ++start) {
    if (res.component_of[start] >= 0) continue;
    int id = res.num_components++;
    long long size = 0;
    std::queue<long long> frontier;
    frontier.push(start);
    res.component_of[start] = id;
    while (!frontier.empty()) {
      long long cur = frontier.front();
      frontier.pop();
      ++size;
      state = permutation_of_rank(n, cur);
      for (const auto& [u, v] : g.edges()) {
        if (state[u] >= k && state[v] >= k) continue;  // no blank involved
        std::swap(state[u], state[v]);
        long long next = rank_of_permutation(state);
        std::swap(state[u], state[v]);
        if (res.component_of[next] < 0) {
          res.component_of[next] = id;
          frontier.push(next);
        }
      }
    }
    res.component_sizes.push_back(size);
  }
  return res;
}

bool oracle_connected(const Graph& g, const Configuration& a,
                      const Configuration& b, long long cap) {
  validate_configuration(g, a);
  validate_configuration(g, b);
  if (a.k != b.k)
    throw FormatError("configurations disagree on blank count");
  OracleResult res = enumerate_components(g, a.k, cap);
  return res.component_of[rank_of(a)] == res.component_of[rank_of(b)];
}

std::optional<int> oracle_min_k_connected(const Graph& g, long long cap) {
  for (int k = 1; k <= g.num_vertices(); ++k)
    if (enumerate_components(g, k, cap).num_components == 1) return k;
  return std::nullopt;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 6)
    throw FormatError("graph family enumeration supports 1 <= n <= 6");
  // Bit i of a mask is edge pair_index(u,v); canonical form is the minimum
  // mask over all vertex permutations.
  int num_pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      pair_index[u][v] = pair_index[v][u] = static_cast<int>(pairs.size());
      pairs.emplace_back(u, v);
    }

  // bit_map[p][i]: where edge-bit i goes under permutation p.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> bit_map;
  do {
    std::vector<int> m(num_pairs);
    for (int i = 0; i < num_pairs; ++i)
      m[i] = pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
    bit_map.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto connected_mask = [&](unsigned mask) {
    std::vector<int> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == u || seen[v]) continue;
        if (mask & (1u << pair_index[u][v])) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };

  std::vector<unsigned> canonical;
  for (unsigned mask = 0; mask < (1u << num_pairs); ++mask) {
    if (!connected_mask(mask)) continue;
    unsigned best = mask;
    for (const auto& m : bit_map) {
      unsigned mapped = 0;
      unsigned rest = mask;
      while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        mapped |= 1u << m[i];
      }
      best = std::min(best, mapped);
    }
    if (best == mask) canonical.push_back(mask);
  }
  std::sort(canonical.begin(), canonical.end(),
            [](unsigned a, unsigned b) {
              int ca = std::popcount(a), cb = std::popcount(b);
              return ca != cb ? ca < cb : a < b;
            });

  std::vector<Graph> out;
  out.reserve(canonical.size());
  for (unsigned mask : canonical) {
    std::vector<Edge> edges;
    for (int i = 0; i < num_pairs; ++i)
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    out.push_back(Graph::build(n, std::move(edges)));
  }
  return out;
}

}  // namespace slidegraph
