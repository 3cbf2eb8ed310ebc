#ifndef SLIDEGRAPH_ORACLE_HPP
#define SLIDEGRAPH_ORACLE_HPP

#include <optional>
#include <vector>

#include "slidegraph/configuration.hpp"
#include "slidegraph/graph.hpp"

namespace slidegraph {

// Brute-force ground truth: explicit breadth-first exploration of the full
// state space (all n! placements of k blanks and n-k tiles). Intentionally
// simple and independent of the analytical modules, so it can arbitrate
// their answers in tests.

inline constexpr long long kDefaultOracleCap = 4'000'000;

struct OracleResult {
  long long num_states = 0;
  int num_components = 0;
  // component id by configuration rank (see rank_of); ids are assigned in
  // ascending order of each component's smallest rank, so results are
  // deterministic run to run.
  std::vector<int> component_of;
  std::vector<long long> component_sizes;  // by component id
};

// Lehmer rank of the placement vector within all n! permutations.
long long rank_of(const Configuration& c);
Configuration configuration_of_rank(int n, int k, long long rank);

// Explores the whole state space. Throws CapError if n! exceeds `cap`.
OracleResult enumerate_components(const Graph& g, int k,
                                  long long cap = kDefaultOracleCap);

// True iff b is reachable from a by legal swaps. Both configurations must
// have the same k.
bool oracle_connected(const Graph& g, const Configuration& a,
                      const Configuration& b,
                      long long cap = kDefaultOracleCap);

// Smallest k in 1..n whose state space is a single component; nullopt when
// no k works (disconnected graphs).
std::optional<int> oracle_min_k_connected(const Graph& g,
                                          long long cap = kDefaultOracleCap);

// Every connected graph on exactly n labeled vertices, one representative
// per isomorphism class, deterministic order. Practical for n <= 6.
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_ORACLE_HPP
