#include "slidegraph/io.hpp"

#include <fstream>
#include <sstream>

namespace slidegraph {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw FormatError("graph JSON must be an object with 'n' and 'edges'");
  if (!j["n"].is_number_integer())
    throw FormatError("graph field 'n' must be an integer");
  int n = j["n"].get<int>();
  if (!j["edges"].is_array())
    throw FormatError("graph field 'edges' must be an array of pairs");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw FormatError("each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::build(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.num_vertices()}, {"edges", edges}};
}

Configuration configuration_from_json(const Graph& g, const json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("placement"))
    throw FormatError(
        "configuration JSON must be an object with 'k' and 'placement'");
  if (!j["k"].is_number_integer())
    throw FormatError("configuration field 'k' must be an integer");
  Configuration c;
  c.k = j["k"].get<int>();
  int n = g.num_vertices();
  c.person_at.assign(n, -1);
  const auto& placement = j["placement"];
  if (!placement.is_object())
    throw FormatError("configuration field 'placement' must be an object");
  for (auto it = placement.begin(); it != placement.end(); ++it) {
    int v;
    try {
      size_t pos = 0;
      v = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError("placement key '" + it.key() +
                        "' is not a vertex id");
    }
    if (v < 0 || v >= n)
      throw FormatError("placement vertex " + std::to_string(v) +
                        " out of range");
    if (!it.value().is_string())
      throw FormatError("placement values must be person id strings");
    if (c.person_at[v] != -1)
      throw FormatError("vertex " + std::to_string(v) +
                        " placed twice in configuration");
    c.person_at[v] = parse_person(c.k, n, it.value().get<std::string>());
  }
  for (int v = 0; v < n; ++v)
    if (c.person_at[v] == -1)
      throw FormatError("vertex " + std::to_string(v) +
                        " missing from placement");
  validate_configuration(g, c);
  return c;
}

json configuration_to_json(const Configuration& c) {
  json placement = json::object();
  for (int v = 0; v < c.num_vertices(); ++v)
    placement[std::to_string(v)] = person_name(c.k, c.person_at[v]);
  return json{{"k", c.k}, {"placement", placement}};
}

MoveSequence moves_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("moves JSON must be an array of pairs");
  MoveSequence moves;
  for (const auto& m : j) {
    if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() ||
        !m[1].is_number_integer())
      throw FormatError("each move must be a pair of vertex ids");
    moves.emplace_back(m[0].get<int>(), m[1].get<int>());
  }
  return moves;
}

json moves_to_json(const MoveSequence& moves) {
  json out = json::array();
  for (const auto& [u, v] : moves) out.push_back({u, v});
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

Graph load_graph_file(const std::string& path) {
  return graph_from_json(load_json_file(path));
}

std::string to_dot(const Graph& g,
                   const std::vector<std::vector<Vertex>>& clusters,
                   const std::optional<Configuration>& config) {
  std::ostringstream out;
  out << "graph board {\n  node [shape=circle];\n";
  std::vector<char> in_cluster(g.num_vertices(), 0);
  for (size_t i = 0; i < clusters.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n    style=dotted;\n    label=\""
        << "circle " << i << "\";\n   ";
    for (Vertex v : clusters[i])
      if (!in_cluster[v]) {
        out << " " << v << ";";
        in_cluster[v] = 1;
      }
    out << "\n  }\n";
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << v << " [label=\"";
    if (config)
      out << v << ":" << person_name(config->k, config->person_at[v]);
    else
      out << v;
    out << "\"";
    if (config && config->is_blank_at(v))
      out << ", style=filled, fillcolor=grey";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace slidegraph
