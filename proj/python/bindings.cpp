#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "obstruct/commands.hpp"
#include "obstruct/errors.hpp"
#include "obstruct/goeritz.hpp"
#include "obstruct/lattice.hpp"
#include "obstruct/manifolds.hpp"
#include "obstruct/numtheory.hpp"
#include "obstruct/repvar.hpp"

namespace py = pybind11;
using namespace obstruct;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num(), r.den());
}

// Structured results cross the boundary as JSON text; the Python side decodes.
std::string dump(const report::Json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_obstruct, m) {
  m.doc() = "Exact obstructions for torus-knot splices";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_OverflowError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("factor", [](i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (const auto& pp : nt::factor(n).factors) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });
  m.def("is_prime", [](u64 n) { return nt::is_prime(n); });
  m.def("legendre", &nt::legendre, py::arg("a"), py::arg("p"));
  m.def("jacobi", &nt::jacobi, py::arg("a"), py::arg("n"));
  m.def(
      "is_square_mod",
      [](i64 a, i64 n) {
        auto r = nt::is_square_mod(a, n);
        return std::make_pair(r.square, r.witness);
      },
      py::arg("a"), py::arg("n"), "Returns (is_square, witness or None).");
  m.def("chi8m", [](i64 a, i64 mm) { return nt::chi8m(a, mm); }, py::arg("a"), py::arg("m"));
  m.def("in_S", &nt::in_S);
  m.def("in_Sprime", &nt::in_Sprime);
  m.def("density", [](const std::string& set, i64 limit) {
    return fraction(nt::density(nt::ResiduePredicateSet::parse(set), limit));
  });
  m.def("product_bound", [](const std::string& kind, int k) {
    using Kind = nt::ResiduePredicateSet::Kind;
    if (kind != "Sk" && kind != "Tk") throw DomainError("kind must be Sk or Tk");
    return fraction(nt::product_bound(kind == "Sk" ? Kind::Sk : Kind::Tk, k));
  });

  m.def("is_changemaker", &lattice::is_changemaker);
  m.def("enumerate_changemakers", &lattice::enumerate_changemakers, py::arg("length"), py::arg("norm"));
  m.def("genus_from_changemaker", &lattice::genus_from_changemaker);
  m.def(
      "embed_in_complement",
      [](const IntMatrix& g, const lattice::Vector& sigma, bool pruning) -> std::optional<std::vector<lattice::Vector>> {
        lattice::SearchOptions opt;
        opt.symmetry_pruning = pruning;
        auto e = lattice::embed_in_complement(GramMatrix(g), sigma, opt);
        if (!e) return std::nullopt;
        return e->vectors;
      },
      py::arg("gram"), py::arg("sigma"), py::arg("symmetry_pruning") = true);
  m.def("determinant", &determinant);

  m.def(
      "goeritz_matrix",
      [](int vertices, const std::vector<std::pair<int, int>>& edges, int basepoint) {
        return goeritz::goeritz_matrix({vertices, edges}, basepoint).rows();
      },
      py::arg("vertices"), py::arg("edges"), py::arg("basepoint") = 0);
  m.def("builtin_goeritz", [](const std::string& name) {
    auto g = goeritz::builtin_diagram(name);
    if (!g) throw DomainError("unknown builtin diagram '" + name + "'");
    return goeritz::goeritz_matrix(*g).rows();
  });
  m.def("family_2odd_2odd", [](i64 a, i64 b) { return goeritz::family_2odd_2odd(a, b).rows(); });

  m.def("h1_order", [](i64 a, i64 b, i64 c, i64 d) { return mf::h1_order(mf::Splice::make(a, b, c, d)); });
  m.def("linking_self", [](i64 a, i64 b, i64 c, i64 d) {
    auto [x, y] = mf::linking_self(mf::Splice::make(a, b, c, d));
    return py::make_tuple(fraction(x), fraction(y));
  });
  m.def("em_slope", [](i64 l, i64 mm, i64 n, i64 p) { return fraction(mf::em_slope(mf::EMKnot::make(l, mm, n, p))); });
  m.def("em_su2_cyclic", [](i64 l, i64 mm, i64 n, i64 p) { return mf::em_su2_cyclic(mf::EMKnot::make(l, mm, n, p)); });

  m.def("_splice_json", [](i64 a, i64 b, i64 c, i64 d, bool cm) { return dump(commands::splice(a, b, c, d, cm)); });
  m.def("_census_json", [](i64 max_product, int jobs) {
    py::gil_scoped_release release;
    return dump(commands::census_2odd(max_product, jobs));
  });
  m.def("_em_json", [](i64 l, i64 mm, i64 n, i64 p) { return dump(commands::em(l, mm, n, p)); });
  m.def("_cable_json", [](const std::string& spec) { return dump(commands::cable(spec)); });

  m.attr("__version__") = "0.1.0";
}
