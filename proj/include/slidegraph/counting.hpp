#ifndef SLIDEGRAPH_COUNTING_HPP
#define SLIDEGRAPH_COUNTING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "slidegraph/decomposition.hpp"
#include "slidegraph/graph.hpp"

namespace slidegraph {

using BigCount = boost::multiprecision::cpp_int;

// Number of connected components of the labeled state space with k blanks:
// all n! placements of k blank people and n-k tiles count as states, two
// states joined when one legal swap links them. Closed form: a multinomial
// that distributes tiles over the circles times a per-circle factor. The
// per-circle factor is 1 except on ring circles (rotation classes), on
// single-blank bipartite circles (2), and on the single-blank theta0 board
// (6). Mode picks the ring factor: Mode::literal keeps the published closed
// form, Mode::corrected the one matching exhaustive enumeration.
// Disconnected boards sum over the ways people split across the pieces.
BigCount count_components(const Graph& g, int k, Mode mode = Mode::corrected);

BigCount factorial(int n);
BigCount binomial(int n, int k);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_COUNTING_HPP
