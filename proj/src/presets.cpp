#include "slidegraph/presets.hpp"

#include <algorithm>
#include <sstream>

namespace slidegraph {

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw FormatError("grid dimensions must be >= 1");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::build(rows * cols, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw FormatError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw FormatError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::build(n, std::move(edges));
}

Graph coiled15_graph() {
  Graph g = grid_graph(4, 4);
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(0, 15);
  return Graph::build(16, std::move(edges));
}

Graph black_white_graph() {
  Graph g = grid_graph(4, 4);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e != Edge{5, 9} && e != Edge{6, 10}) edges.push_back(e);
  return Graph::build(16, std::move(edges));
}

Configuration black_white_start() {
  Graph g = black_white_graph();
  Configuration c;
  c.k = 4;
  c.person_at.assign(16, -1);
  const std::vector<int> blanks = {5, 6, 9, 10};
  for (int i = 0; i < 4; ++i) c.person_at[blanks[i]] = i;
  int tile = 4;
  for (int v = 0; v < 16; ++v)
    if (c.person_at[v] < 0) c.person_at[v] = tile++;
  return c;
}

Graph theta0_graph() {
  return Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5},
                          {0, 6}, {3, 6}});
}

Graph snake_tongue_graph(int n) {
  if (n < 4) throw FormatError("snake_tongue needs n >= 4");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 3, n - 1);
  return Graph::build(n, std::move(edges));
}

Graph stopwatch_graph(int n) {
  if (n < 4) throw FormatError("stopwatch needs n >= 4");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 2);
  edges.emplace_back(0, n - 1);
  return Graph::build(n, std::move(edges));
}

Graph hourglass_graph(int a, int b) {
  if (a < 3 || b < 3) throw FormatError("hourglass needs ring sizes >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < a; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, a - 1);
  edges.emplace_back(0, a);
  for (int v = a; v + 1 < a + b - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, a + b - 2);
  return Graph::build(a + b - 1, std::move(edges));
}

Graph bowtie_graph() {
  return Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

namespace {

// Splits "name(a,b)" into name and integer arguments.
void parse_preset_text(const std::string& text, std::string& name,
                       std::vector<int>& args) {
  auto open = text.find('(');
  if (open == std::string::npos) {
    name = text;
    return;
  }
  if (text.back() != ')')
    throw FormatError("bad preset syntax '" + text + "'");
  name = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      args.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw FormatError("bad preset argument '" + tok + "' in '" + text + "'");
    }
  }
}

void want_arity(const std::string& name, const std::vector<int>& args,
                size_t arity) {
  if (args.size() != arity)
    throw FormatError("preset '" + name + "' takes " + std::to_string(arity) +
                      " argument(s), got " + std::to_string(args.size()));
}

}  // namespace

Graph make_preset(const std::string& text) {
  std::string name;
  std::vector<int> args;
  parse_preset_text(text, name, args);
  if (name == "grid") {
    want_arity(name, args, 2);
    return grid_graph(args[0], args[1]);
  }
  if (name == "path") {
    want_arity(name, args, 1);
    return path_graph(args[0]);
  }
  if (name == "cycle") {
    want_arity(name, args, 1);
    return cycle_graph(args[0]);
  }
  if (name == "coiled15") {
    want_arity(name, args, 0);
    return coiled15_graph();
  }
  if (name == "black_white") {
    want_arity(name, args, 0);
    return black_white_graph();
  }
  if (name == "theta0") {
    want_arity(name, args, 0);
    return theta0_graph();
  }
  if (name == "snake_tongue") {
    want_arity(name, args, 1);
    return snake_tongue_graph(args[0]);
  }
  if (name == "stopwatch") {
    want_arity(name, args, 1);
    return stopwatch_graph(args[0]);
  }
  if (name == "hourglass") {
    want_arity(name, args, 2);
    return hourglass_graph(args[0], args[1]);
  }
  if (name == "bowtie") {
    want_arity(name, args, 0);
    return bowtie_graph();
  }
  throw FormatError("unknown preset '" + name + "'");
}

std::optional<Configuration> preset_special_start(const std::string& text) {
  std::string name;
  std::vector<int> args;
  parse_preset_text(text, name, args);
  if (name == "black_white") return black_white_start();
  return std::nullopt;
}

}  // namespace slidegraph
