#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obstruct/gram.hpp"

/// Goeritz matrices of checkerboard graphs.
namespace obstruct::goeritz {

/// Multigraph on vertices 0..vertex_count-1; parallel edges are repeated.
struct CheckerboardGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  bool is_connected() const;
  bool has_loop() const;
};

/// Diagonal -deg(v_i), off-diagonal edge multiplicity, basepoint row deleted.
GramMatrix goeritz_matrix(const CheckerboardGraph& g, int basepoint = 0);

/// |det G|, the order of H1 of the branched double cover.
i64 det_h1_order(const GramMatrix& g);

/// The 5x5 black-graph form for the alternating diagram of the
/// (2a+1,2),(2b+1,2) splice link; |det| = 4(2a+1)(2b+1) - 1.
GramMatrix family_2odd_2odd(i64 a, i64 b);

/// Black graph of the two-twist-region diagram family with parameters
/// (a0, a1, b0, b1); a0, b0 >= 1 and a1, b1 >= 2.
CheckerboardGraph fig3_black(int a0, int a1, int b0, int b1);

/// White graph whose Goeritz matrix is the 6x6 form of the
/// (3,5),(-3,5) splice diagram.
CheckerboardGraph l35_white();

/// Named graphs: "L35-white", and "fig3-black(a0,a1,b0,b1)" for any valid
/// parameters.  Returns nullopt for unknown names.
std::optional<CheckerboardGraph> builtin_diagram(const std::string& name);

/// Fixed-name entries of the builtin table, with fig3-black(1,2,1,2) as the
/// family representative.
std::map<std::string, CheckerboardGraph> builtin_diagrams();

/// Graph text format: vertex count line, then "u v" per edge; '#' comments.
CheckerboardGraph parse_graph(std::istream& in);
CheckerboardGraph parse_graph(const std::string& text);

} // namespace obstruct::goeritz
