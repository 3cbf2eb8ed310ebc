#ifndef SLIDEGRAPH_CIRCLES_HPP
#define SLIDEGRAPH_CIRCLES_HPP

#include <vector>

#include "slidegraph/graph.hpp"

namespace slidegraph {

// A circle is a maximal connected induced subgraph that is free of internal
// bottlenecks for k blanks: every hallway of the induced subgraph has order
// strictly below k. Within a circle, k blanks can rearrange tiles subject
// only to the global invariants (parity on bipartite boards with one blank,
// rotation order on rings, the theta0 classes); across circles, only which
// tiles sit in which circle matters. Circles cover the board and overlap on
// the hallway segments separating them.
struct Circle {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Vertex> anchors;   // the k smallest vertices: blank parking
};

// All circles of a connected board, deterministically ordered by vertex
// list. Throws FormatError for a disconnected board or k out of range, and
// CapError if the block-absorption search exceeds its state budget.
// Postconditions (verified internally, violation is a logic error):
// circles cover all vertices, each has at least k of them, and the overlap
// identity sum(|L_i| - k) == n - k holds.
std::vector<Circle> social_circles(const Graph& g, int k);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_CIRCLES_HPP
