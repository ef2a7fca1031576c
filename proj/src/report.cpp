#include "obstruct/report.hpp"

namespace obstruct::report {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const lattice::Embedding& e) {
  return Json{{"sigma", e.sigma}, {"vectors", e.vectors}, {"genus", lattice::genus_from_changemaker(e.sigma)}};
}

Json to_json(const GramMatrix& g) { return g.rows(); }

Json to_json(const mf::TorusKnot& k) { return Json::array({k.p, k.q}); }

Json to_json(const mf::Splice& y) { return Json{{"first", to_json(y.first)}, {"second", to_json(y.second)}, {"name", y.str()}}; }

Json to_json(const mf::IntegralResult& r) {
  Json j{{"slope", r.slope}, {"residue", mf::to_string(r.verdict)}};
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const mf::Manifold& m) {
  Json j{{"description", m.str()}, {"h1", m.h1}};
  switch (m.kind) {
  case mf::Manifold::Kind::Lens: j["kind"] = "lens"; break;
  case mf::Manifold::Kind::LensSum: j["kind"] = "lens-sum"; break;
  case mf::Manifold::Kind::Seifert:
    j["kind"] = "seifert";
    j["base_orders"] = m.base_orders;
    break;
  }
  return j;
}

Json to_json(const mf::CableSlope& s) {
  Json j{{"family", s.family()}, {"parametric", s.parametric}};
  if (s.parametric) {
    j["slope"] = std::to_string(s.pq) + "+1/m";
    j["manifold"] = "L(" + std::to_string(s.pq) + "m+1," + std::to_string(s.q * s.q) + "m)";
    j["example_m1"] = Json{{"slope", to_json(s.slope_at(1))}, {"manifold", to_json(s.manifold_at(1))}};
  } else {
    j["slope"] = to_json(s.slope);
    j["manifold"] = to_json(s.manifold);
  }
  return j;
}

Json to_json(const mf::Verdict& v) {
  Json j;
  j["splice"] = to_json(v.splice);
  j["h1_order"] = v.h1;
  j["linking_self"] = Json::array({to_json(v.linking.first), to_json(v.linking.second)});
  if (v.nonintegral) {
    j["nonintegral"] = Json{{"l", v.nonintegral->l},
                            {"m", v.nonintegral->m},
                            {"orientation", v.nonintegral->orientation},
                            {"slope", to_json(*v.nonintegral_slope)}};
  } else {
    j["nonintegral"] = nullptr;
  }
  j["integral_plus"] = to_json(v.integral_plus);
  j["integral_plus"]["ruled_out"] = v.plus_ruled_out;
  j["integral_minus"] = to_json(v.integral_minus);
  j["integral_minus"]["ruled_out"] = v.minus_ruled_out;
  Json shortcuts = Json::array();
  for (const auto& s : v.shortcuts) shortcuts.push_back(Json{{"set", s.set}, {"n", s.n}, {"member", s.member}});
  j["shortcuts"] = shortcuts;
  Json cm{{"status", v.changemaker.status}};
  if (!v.changemaker.form.empty()) {
    cm["form"] = v.changemaker.form;
    cm["slopes"] = v.changemaker.slopes;
    cm["changemakers_tested"] = v.changemaker.changemakers_tested;
  }
  if (v.changemaker.witness) cm["witness"] = to_json(*v.changemaker.witness);
  j["changemaker"] = cm;
  j["overall"] = mf::to_string(v.overall);
  // "None" for the non-integral pattern is only up to swap/mirror symmetries
  j["assumptions"] = Json::array({"splice homeomorphism decided up to factor swap and global mirror"});
  return j;
}

Json to_json(const repvar::IrrepWitness& w) {
  return Json{{"g", w.g},
              {"D", w.D},
              {"A", w.A},
              {"q", w.q},
              {"phi_over_pi", to_json(w.phi_over_pi)},
              {"alpha1", w.orders.alpha1},
              {"alpha2", w.orders.alpha2},
              {"k", w.k},
              {"in_middle_third", w.in_middle_third()},
              {"extends", w.extends()}};
}

Json envelope(const std::string& command, Json inputs, Json result) {
  return Json{{"schema", kSchema}, {"version", kVersion}, {"command", command}, {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

} // namespace obstruct::report
