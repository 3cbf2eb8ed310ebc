#include "slidegraph/configuration.hpp"

#include <algorithm>

namespace slidegraph {

std::vector<int> Configuration::vertex_of() const {
  std::vector<int> inv(person_at.size());
  for (size_t v = 0; v < person_at.size(); ++v) inv[person_at[v]] = (int)v;
  return inv;
}

std::string person_name(int k, int person) {
  if (person < k) return "b" + std::to_string(person + 1);
  return "a" + std::to_string(person - k + 1);
}

int parse_person(int k, int n, const std::string& name) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
    throw FormatError("bad person id '" + name + "' (want b<i> or a<i>)");
  int idx = 0;
  try {
    size_t pos = 0;
    idx = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw FormatError("bad person id '" + name + "'");
  }
  if (name[0] == 'b') {
    if (idx < 1 || idx > k)
      throw FormatError("blank id '" + name + "' out of range (k=" +
                        std::to_string(k) + ")");
    return idx - 1;
  }
  if (idx < 1 || idx > n - k)
    throw FormatError("tile id '" + name + "' out of range (n-k=" +
                      std::to_string(n - k) + ")");
  return k + idx - 1;
}

void validate_configuration(const Graph& g, const Configuration& c) {
  int n = g.num_vertices();
  if (c.k < 1 || c.k > n)
    throw FormatError("blank count k=" + std::to_string(c.k) +
                      " out of range (need 1 <= k <= n=" + std::to_string(n) +
                      ")");
  if ((int)c.person_at.size() != n)
    throw FormatError("configuration covers " +
                      std::to_string(c.person_at.size()) + " vertices, graph has " +
                      std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int p : c.person_at) {
    if (p < 0 || p >= n)
      throw FormatError("person id out of range in configuration");
    if (seen[p]) throw FormatError("person placed twice in configuration");
    seen[p] = 1;
  }
}

Configuration canonical_start(const Graph& g, int k) {
  int n = g.num_vertices();
  if (k < 1 || k > n)
    throw FormatError("blank count k=" + std::to_string(k) + " out of range");
  Configuration c;
  c.k = k;
  c.person_at.resize(n);
  for (int v = 0; v < n - k; ++v) c.person_at[v] = k + v;  // tiles first
  for (int v = n - k; v < n; ++v) c.person_at[v] = v - (n - k);  // then blanks
  return c;
}

bool is_legal_move(const Graph& g, const Configuration& c, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) return false;
  return c.is_blank_at(u) || c.is_blank_at(v);
}

Configuration apply_swap(const Graph& g, const Configuration& c, Vertex u,
                         Vertex v) {
  if (!g.has_edge(u, v))
    throw FormatError("illegal move (" + std::to_string(u) + "," +
                      std::to_string(v) + "): not an edge");
  if (!c.is_blank_at(u) && !c.is_blank_at(v))
    throw FormatError("illegal move (" + std::to_string(u) + "," +
                      std::to_string(v) + "): neither endpoint is a blank");
  Configuration out = c;
  std::swap(out.person_at[u], out.person_at[v]);
  return out;
}

Configuration replay(const Graph& g, const Configuration& c,
                     const MoveSequence& moves) {
  validate_configuration(g, c);
  Configuration cur = c;
  for (size_t i = 0; i < moves.size(); ++i) {
    auto [u, v] = moves[i];
    if (!is_legal_move(g, cur, u, v))
      throw FormatError("illegal move at index " + std::to_string(i) + ": (" +
                        std::to_string(u) + "," + std::to_string(v) + ")");
    std::swap(cur.person_at[u], cur.person_at[v]);
  }
  return cur;
}

}  // namespace slidegraph
