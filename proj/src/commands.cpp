#include "obstruct/commands.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "obstruct/errors.hpp"
#include "obstruct/numtheory.hpp"

namespace obstruct::commands {

Json splice(i64 a, i64 b, i64 c, i64 d, bool with_changemaker) {
  return report::to_json(mf::not_surgery_verdict(mf::Splice::make(a, b, c, d), with_changemaker));
}

Json census_2odd(i64 max_product, int jobs) {
  struct Row {
    i64 a, b, n;
    lattice::ObstructionResult result;
  };
  std::vector<Row> rows;
  for (i64 a = 1; (2 * a + 1) * (2 * a + 1) <= max_product; ++a)
    for (i64 b = a; (2 * a + 1) * (2 * b + 1) <= max_product; ++b)
      rows.push_back({a, b, 4 * (2 * a + 1) * (2 * b + 1) - 1, {}});

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < rows.size(); i = next++)
      rows[i].result = lattice::changemaker_obstruction(goeritz::family_2odd_2odd(rows[i].a, rows[i].b), rows[i].n);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Json table = Json::array();
  Json witnesses = Json::array();
  for (const auto& r : rows) {
    Json row{{"a", r.a}, {"b", r.b}, {"slope", -r.n}, {"changemakers_tested", r.result.changemakers_tested}};
    row["status"] = r.result.obstructed ? "obstructed" : "witness";
    if (!r.result.obstructed) {
      row["witness"] = report::to_json(r.result.witnesses.front());
      witnesses.push_back(Json::array({r.a, r.b}));
    }
    table.push_back(std::move(row));
  }
  return Json{{"rows", table}, {"witness_pairs", witnesses}, {"max_product", max_product}};
}

Json changemaker_enum(int length, i64 norm) {
  auto list = lattice::enumerate_changemakers(length, norm);
  return Json{{"changemakers", list}, {"count", list.size()}};
}

Json changemaker_embed(const GramMatrix& g, i64 p, bool all, bool symmetry_pruning) {
  lattice::SearchOptions options;
  options.symmetry_pruning = symmetry_pruning;
  auto res = lattice::changemaker_obstruction(g, p, all, options);
  Json witnesses = Json::array();
  for (const auto& e : res.witnesses) witnesses.push_back(report::to_json(e));
  return Json{{"verdict", res.obstructed ? "Obstructed" : "Witness"},
              {"witnesses", witnesses},
              {"changemakers_tested", res.changemakers_tested},
              {"exhaustive", all || res.obstructed},
              {"determinant", determinant(g.rows())}};
}

Json em(i64 l, i64 m, i64 n, i64 p) {
  const auto k = mf::EMKnot::make(l, m, n, p);
  const Rational r = mf::em_slope(k);
  Json j{{"knot", k.str()}, {"slope", report::to_json(r)}, {"h1_order", checked_abs(r.num())}};
  const bool cyclic = mf::em_su2_cyclic(k);
  j["su2_cyclic"] = cyclic;
  j["degenerate_parameters"] = k.degenerate();
  j["splice_form"] = nullptr;
  j["witness"] = nullptr;
  if (cyclic) {
    try {
      if (auto y = mf::em_splice_form(k)) {
        j["splice_form"] = report::to_json(*y);
        j["splice_form"]["orientation"] = "+/-";
      }
    } catch (const DomainError& e) {
      j["splice_form_note"] = e.what();
    }
  } else if (n == 0) {
    if (m == 0 || m == 1) {
      j["witness_note"] = "n = 0 requires m not in {0, 1}";
    } else if (auto w = repvar::irrep_witness(l, m, p)) {
      j["witness"] = report::to_json(*w);
    }
  }
  return j;
}

Json density(const std::string& set_name, i64 limit, bool bound, int bound_k) {
  const auto set = nt::ResiduePredicateSet::parse(set_name);
  const i64 count = nt::count_members(set, limit);
  Json j{{"set", set.name()}, {"limit", limit}, {"count", count}, {"density", report::to_json(Rational(count, limit))}};
  if (bound) {
    using Kind = nt::ResiduePredicateSet::Kind;
    std::optional<Rational> pb;
    std::string via;
    if (set.kind == Kind::Sk || set.kind == Kind::Tk) {
      pb = nt::product_bound(set.kind, set.k);
      via = set.name();
    } else if (set.kind == Kind::S) {
      pb = nt::product_bound(Kind::Sk, bound_k);
      via = "Sk:" + std::to_string(bound_k);
    }
    if (pb) {
      j["product_bound"] = report::to_json(*pb);
      j["product_bound_set"] = via;
    } else {
      j["product_bound"] = nullptr;
    }
  }
  return j;
}

Json cable(const std::string& spec) {
  const auto k = mf::IteratedTorusKnot::parse(spec);
  Json rows = Json::array();
  for (const auto& s : mf::cable_su2_cyclic_slopes(k)) rows.push_back(report::to_json(s));
  return Json{{"knot", k.str()}, {"depth", k.cables.size() + 1}, {"slopes", rows}};
}

Json goeritz(const goeritz::CheckerboardGraph& g, int basepoint) {
  const auto m = goeritz::goeritz_matrix(g, basepoint);
  return Json{{"gram", report::to_json(m)},
              {"rank", m.rank()},
              {"h1_order", goeritz::det_h1_order(m)},
              {"negative_definite", m.is_negative_definite()},
              {"vertices", g.vertex_count},
              {"edges", g.edges.size()}};
}

} // namespace obstruct::commands
