#include "obstruct/goeritz.hpp"

#include <istream>
#include <regex>
#include <sstream>

#include "obstruct/errors.hpp"

namespace obstruct::goeritz {

bool CheckerboardGraph::is_connected() const {
  if (vertex_count < 1) return false;
  std::vector<int> parent(vertex_count);
  for (int i = 0; i < vertex_count; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = vertex_count;
  for (auto [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

bool CheckerboardGraph::has_loop() const {
  for (auto [u, v] : edges)
    if (u == v) return true;
  return false;
}

GramMatrix goeritz_matrix(const CheckerboardGraph& g, int basepoint) {
  if (g.vertex_count < 2) throw DomainError("graph needs at least two vertices");
  if (basepoint < 0 || basepoint >= g.vertex_count) throw DomainError("basepoint is not a vertex");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count) throw DomainError("edge endpoint out of range");
  if (g.has_loop()) throw DomainError("graph has a loop");
  if (!g.is_connected()) throw DomainError("graph is disconnected");

  auto index = [basepoint](int v) { return v < basepoint ? v : v - 1; };
  const int n = g.vertex_count - 1;
  IntMatrix m(n, std::vector<i64>(n, 0));
  for (auto [u, v] : g.edges) {
    if (u != basepoint) m[index(u)][index(u)] -= 1;
    if (v != basepoint) m[index(v)][index(v)] -= 1;
    if (u != basepoint && v != basepoint) {
      m[index(u)][index(v)] += 1;
      m[index(v)][index(u)] += 1;
    }
  }
  return GramMatrix(std::move(m));
}

i64 det_h1_order(const GramMatrix& g) { return checked_abs(determinant(g.rows())); }

GramMatrix family_2odd_2odd(i64 a, i64 b) {
  if (a < 1 || b < 1) throw DomainError("family_2odd_2odd requires a, b >= 1");
  return GramMatrix({
      {-3, 1, 0, 1, 0},
      {1, -3, 1, 0, 0},
      {0, 1, -b - 1, b, 0},
      {1, 0, b, -b - 2, 1},
      {0, 0, 0, 1, -a - 1},
  });
}

CheckerboardGraph fig3_black(int a0, int a1, int b0, int b1) {
  if (a0 < 1 || b0 < 1 || a1 < 2 || b1 < 2) throw DomainError("fig3-black requires a0, b0 >= 1 and a1, b1 >= 2");
  CheckerboardGraph g;
  g.vertex_count = 6 + (b1 - 2) + (a1 - 2);
  auto repeat = [&](int u, int v, int times) {
    for (int i = 0; i < times; ++i) g.edges.emplace_back(u, v);
  };
  // a path u -> v through `len - 1` fresh vertices
  int next = 6;
  auto path = [&](int u, int v, int len) {
    int prev = u;
    for (int i = 1; i < len; ++i) {
      g.edges.emplace_back(prev, next);
      prev = next++;
    }
    g.edges.emplace_back(prev, v);
  };
  repeat(0, 1, b1 - 1);
  repeat(1, 2, a1 - 1);
  path(2, 3, b1 - 1);
  repeat(3, 4, b0);
  path(4, 5, a1 - 1);
  repeat(5, 0, a0);
  g.edges.emplace_back(0, 2);
  g.edges.emplace_back(1, 4);
  return g;
}

CheckerboardGraph l35_white() {
  CheckerboardGraph g;
  g.vertex_count = 7;
  g.edges = {{0, 1}, {0, 5}, {1, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 4}, {3, 6}, {4, 5}};
  return g;
}

std::optional<CheckerboardGraph> builtin_diagram(const std::string& name) {
  if (name == "L35-white") return l35_white();
  static const std::regex fig3(R"(fig3-black\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, fig3)) {
    try {
      return fig3_black(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]));
    } catch (const std::out_of_range&) {
      throw RangeError("fig3-black parameter out of range");
    }
  }
  return std::nullopt;
}

std::map<std::string, CheckerboardGraph> builtin_diagrams() {
  return {{"L35-white", l35_white()}, {"fig3-black(1,2,1,2)", fig3_black(1, 2, 1, 2)}};
}

CheckerboardGraph parse_graph(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty graph file");
  CheckerboardGraph g;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    if (!(head >> g.vertex_count) || g.vertex_count < 1 || (head >> extra))
      throw ParseError("first line must be the vertex count");
  }
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("bad edge line: " + lines[i]);
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw ParseError("edge endpoint out of range: " + lines[i]);
    g.edges.emplace_back(u, v);
  }
  return g;
}

CheckerboardGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

} // namespace obstruct::goeritz
