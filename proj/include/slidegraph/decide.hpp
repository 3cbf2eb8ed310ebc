#ifndef SLIDEGRAPH_DECIDE_HPP
#define SLIDEGRAPH_DECIDE_HPP

#include <string>
#include <utility>
#include <vector>

#include "slidegraph/configuration.hpp"
#include "slidegraph/graph.hpp"

namespace slidegraph {

enum class VerdictReason {
  kConnected,
  kPeopleSetMismatch,    // a circle or component holds different people
  kExactMismatch,        // a component without blanks is not identical
  kCyclicOrderMismatch,  // ring circle: tile rotation order differs
  kParityMismatch,       // one blank on a bipartite circle: odd permutation
  kTheta0ClassMismatch,  // one blank on a theta0 circle: different class
};

std::string verdict_reason_name(VerdictReason r);

struct Verdict {
  bool connected = false;
  VerdictReason reason = VerdictReason::kConnected;
  std::string detail;
};

// Walks blanks onto the anchor vertices with legal moves. Deterministic:
// repeatedly picks the (unoccupied anchor, unparked blank) pair at minimal
// shortest-path distance (ties: smaller anchor, then smaller blank vertex),
// preferring routes that do not pass through anchors already holding a
// blank. Returns the parked configuration and the moves that realize it;
// replaying the moves on c reproduces the configuration exactly.
std::pair<Configuration, MoveSequence> normalize(
    const Graph& g, const Configuration& c,
    const std::vector<Vertex>& anchors);

// Decides whether b is reachable from a by legal swaps, in time polynomial
// in the board size (no state-space enumeration). Components are handled
// independently; within a component, both configurations are parked on each
// circle's anchors and compared circle by circle: people sets first, then
// the ring rotation order on cycle circles, then the single-blank parity
// and theta0 class checks. Blank identities are never compared: with all
// blanks parked together they can always be permuted among themselves.
Verdict decide(const Graph& g, const Configuration& a, const Configuration& b);

// Which of the six mutually unreachable classes a one-blank configuration
// of the canonical theta0 board belongs to. Ids are stable across runs.
int theta0_class(const Configuration& c);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_DECIDE_HPP
