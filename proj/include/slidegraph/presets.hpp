#ifndef SLIDEGRAPH_PRESETS_HPP
#define SLIDEGRAPH_PRESETS_HPP

#include <optional>
#include <string>

#include "slidegraph/configuration.hpp"
#include "slidegraph/graph.hpp"

namespace slidegraph {

// Named board families. Vertex layouts are fixed so that tests and serialized
// boards are stable across releases; see docs/presets.md for pictures.

// a x b grid, row-major: vertex r*b + c.
Graph grid_graph(int rows, int cols);

// Path 0-1-...-(n-1).
Graph path_graph(int n);

// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle_graph(int n);

// 4x4 grid plus the extra edge (0,15) joining two opposite corners.
Graph coiled15_graph();

// 4x4 grid with the two central vertical edges (5,9) and (6,10) removed;
// the classic start for this board places four blanks on the centre 2x2
// {5,6,9,10} (see black_white_start).
Graph black_white_graph();
Configuration black_white_start();

// Two degree-3 vertices joined by three internally disjoint paths with
// 1, 2 and 2 interior vertices: the 6-cycle 0-1-2-3-4-5-0 plus vertex 6
// adjacent to 0 and 3. 7 vertices, 8 edges, not bipartite, biconnected.
Graph theta0_graph();

// Path 0-1-...-(n-2) plus leaf n-1 attached at n-3, n >= 4: a path whose
// far end splits into two tips {n-2, n-1}. n=4 gives the 3-star.
Graph snake_tongue_graph(int n);

// Cycle 0-1-...-(n-2)-0 plus leaf n-1 attached at 0, n >= 4: a ring with
// one pendant vertex.
Graph stopwatch_graph(int n);

// Two cycles of lengths a and b (a, b >= 3) sharing exactly the vertex 0:
// ring 0..a-1 and ring 0,a,a+1,...,a+b-2.
Graph hourglass_graph(int a, int b);

// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
Graph bowtie_graph();

// Parses textual preset names: "theta0", "bowtie", "coiled15", "black_white",
// "grid(4,4)", "path(5)", "cycle(6)", "snake_tongue(6)", "stopwatch(7)",
// "hourglass(4,4)". Throws FormatError for unknown names or bad arities.
Graph make_preset(const std::string& text);

// The distinguished start position for presets that have one (currently only
// black_white); nullopt otherwise.
std::optional<Configuration> preset_special_start(const std::string& text);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_PRESETS_HPP
