#ifndef SLIDEGRAPH_SOLVER_HPP
#define SLIDEGRAPH_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "slidegraph/configuration.hpp"
#include "slidegraph/decide.hpp"
#include "slidegraph/graph.hpp"

namespace slidegraph {

inline constexpr long long kDefaultSearchCap = 1'000'000;

// Thrown by the bounded-search pieces when a board piece has more states
// than the cap allows; solve() converts it into a kFallbackExceeded
// outcome, direct op callers see the exception.
class FallbackExceeded : public Error {
 public:
  FallbackExceeded(const std::string& lib, long long b)
      : Error("state space of " + lib + " exceeds the search cap (" +
              std::to_string(b) + ")"),
        library(lib),
        bound(b) {}
  std::string library;
  long long bound;
};

enum class SolveStatus { kSolved, kNotConnected, kFallbackExceeded };

std::string solve_status_name(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kSolved;
  MoveSequence moves;        // valid when kSolved; replays from -> to exactly
  Verdict verdict;           // valid when kNotConnected
  std::string library;       // which piece refused, when kFallbackExceeded
  long long state_bound = 0; // its state count or the exceeded cap
  std::string note;          // strategies used, per component
};

// Splits the people into the set bound for the remainder side (x_people,
// size |A|) and the set bound for the interior of a leaf block (y_people,
// size |L|-1), for a leaf block `leaf_block` of the block-cut tree hanging
// off `cut_vertex`. Blanks are assigned to the remainder side while room
// permits, overflowing into y_people only when the remainder is all blanks.
struct BlockParty {
  std::vector<int> x_people;
  std::vector<int> y_people;
  std::vector<Vertex> leaf_block;  // includes the cut vertex
  Vertex cut_vertex = -1;
};

// Staging checks for a configuration relative to a party: blanks sit on the
// cut vertex and on one of its remainder-side neighbors, the leaf interior
// holds y_people only, and no blank is inside the leaf interior (unless the
// remainder side is entirely blanks).
struct BalancedTarget {
  BlockParty party;
  bool people_separated = false;
  bool blank_on_cut = false;
  bool blank_on_remainder_neighbor = false;
  bool no_blanks_in_leaf_interior = false;
  bool balanced() const {
    return people_separated && blank_on_cut && blank_on_remainder_neighbor &&
           no_blanks_in_leaf_interior;
  }
};

BlockParty make_block_party(const Graph& g, int k,
                            const std::vector<Vertex>& leaf_block,
                            Vertex cut_vertex);
BalancedTarget check_balanced(const Graph& g, const Configuration& c,
                              const BlockParty& party);

// Arbitrary rearrangement of a ring-with-pendant board (k >= 2): a blank is
// parked on the pendant, the ring order is rebuilt by extracting one tile
// at a time into the pendant and reinserting it next to its predecessor,
// and an exact ring alignment pass finishes positions and blank ids.
// The board may be any graph of that shape; k < 2 is an error.
MoveSequence stopwatch_permute(const Graph& board, const Configuration& c,
                               const Configuration& target);

// Exchange of the only two tiles on a three-leaf tree (path plus one leaf
// at the fork) where every other cell is blank: the tiles drive into the
// two fork tips, swap exit order, and all blanks are walked back to their
// original cells. Requires exactly two tiles; x and y are their person ids.
MoveSequence snake_exchange(const Graph& board, const Configuration& c,
                            int x, int y);

// Rearrangement of a single fully-mixable board piece with k >= 2: rings
// with a pendant go through stopwatch_permute; other shapes (hourglasses,
// biconnected non-rings, balloons over non-rings) go through bounded
// bidirectional search. Throws FallbackExceeded when the piece has more
// states than the cap allows.
MoveSequence balloon_reconfigure(const Graph& board, const Configuration& c,
                                 const Configuration& target,
                                 long long cap = kDefaultSearchCap);

// Searches outward from `cut_vertex` into the remainder side for a nearest
// branching vertex and returns a three-leaf-tree vertex list in path order:
// leaf-block neighbor of the cut vertex first, then the cut vertex, the
// spine into the remainder, and the two fork tips. Empty when the
// remainder side is a bare path (no branching vertex).
std::optional<std::vector<Vertex>> find_snake_tongue(
    const Graph& g, const std::vector<Vertex>& remainder_side,
    Vertex cut_vertex, int k);

// One cross-block exchange: tile x (on the remainder side) and tile y
// (inside the leaf block) swap sides, via blank saturation of a snake
// tongue straddling the cut vertex and a snake exchange on it. The
// configuration must be balanced for the party up to the staged blanks.
MoveSequence trade(const Graph& g, const Configuration& c,
                   const BlockParty& party, int x, int y,
                   long long cap = kDefaultSearchCap);

// Move-sequence planner: decides first (kNotConnected carries the verdict),
// then plans per component with shape macros — free sort when at most one
// tile, path and ring alignment, ring-with-pendant rebuild, two-tile
// three-leaf-tree exchange, block-tree trading for k >= 2 — and bounded
// bidirectional search for the rest. Every returned sequence is replayed
// internally before being returned.
SolveOutcome solve(const Graph& g, const Configuration& from,
                   const Configuration& to,
                   long long cap = kDefaultSearchCap);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_SOLVER_HPP
