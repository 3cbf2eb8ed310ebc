#ifndef SLIDEGRAPH_CONFIGURATION_HPP
#define SLIDEGRAPH_CONFIGURATION_HPP

#include <string>
#include <vector>

#include "slidegraph/graph.hpp"

namespace slidegraph {

// A board state. Exactly one person sits on each vertex; persons 0..k-1 are
// the k blanks ("b1".."bk" on the wire), persons k..n-1 are the labeled
// tiles ("a1".."a(n-k)"). A swap across an edge is legal iff at least one
// endpoint currently holds a blank; tiles never swap with each other.
struct Configuration {
  int k = 0;
  std::vector<int> person_at;  // vertex -> person

  int num_vertices() const { return static_cast<int>(person_at.size()); }
  bool is_blank_at(Vertex v) const { return person_at[v] < k; }
  bool operator==(const Configuration& other) const {
    return k == other.k && person_at == other.person_at;
  }

  // person -> vertex.
  std::vector<int> vertex_of() const;
};

using Move = std::pair<Vertex, Vertex>;  // swap the occupants of two vertices
using MoveSequence = std::vector<Move>;

// Wire names for persons: blanks "b1".."bk", tiles "a1".."a(n-k)".
std::string person_name(int k, int person);
int parse_person(int k, int n, const std::string& name);

// Throws FormatError unless c is a bijection onto persons 0..n-1 with
// 1 <= k <= n.
void validate_configuration(const Graph& g, const Configuration& c);

// Tiles a1..a(n-k) on vertices 0..n-k-1 in order, blanks b1..bk on the
// remaining (largest) vertices in order.
Configuration canonical_start(const Graph& g, int k);

// Returns whether swapping the occupants of u and v is a legal move.
bool is_legal_move(const Graph& g, const Configuration& c, Vertex u, Vertex v);

// Applies one swap, validating legality. Throws FormatError on an illegal
// move (non-edge, or neither endpoint blank).
Configuration apply_swap(const Graph& g, const Configuration& c, Vertex u,
                         Vertex v);

// Applies a whole sequence; the error message for an illegal move includes
// its position in the sequence.
Configuration replay(const Graph& g, const Configuration& c,
                     const MoveSequence& moves);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_CONFIGURATION_HPP
