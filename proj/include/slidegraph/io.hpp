#ifndef SLIDEGRAPH_IO_HPP
#define SLIDEGRAPH_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slidegraph/configuration.hpp"
#include "slidegraph/graph.hpp"

namespace slidegraph {

// Wire formats:
//   graph          {"n": 6, "edges": [[0,1],[1,2],...]}
//   configuration  {"k": 2, "placement": {"0": "b1", "1": "a3", ...}}
//   moves          [[0,1],[1,2],...]
// All readers throw FormatError with a message naming the offending field.

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

Configuration configuration_from_json(const Graph& g, const nlohmann::json& j);
nlohmann::json configuration_to_json(const Configuration& c);

MoveSequence moves_from_json(const nlohmann::json& j);
nlohmann::json moves_to_json(const MoveSequence& moves);

// File helpers; throw FormatError on unreadable files or bad JSON.
nlohmann::json load_json_file(const std::string& path);
Graph load_graph_file(const std::string& path);

// Graphviz export. Optional clusters are drawn as dotted boxes (a vertex
// appearing in several clusters is attached to the first one); with a
// configuration, every vertex is labeled by its occupant and blanks are
// filled grey.
std::string to_dot(const Graph& g,
                   const std::vector<std::vector<Vertex>>& clusters = {},
                   const std::optional<Configuration>& config = std::nullopt);

}  // namespace slidegraph

#endif  // SLIDEGRAPH_IO_HPP
