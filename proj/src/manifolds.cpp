#include "obstruct/manifolds.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

#include "obstruct/errors.hpp"
#include "obstruct/goeritz.hpp"
#include "obstruct/numtheory.hpp"

namespace obstruct::mf {

namespace {

// Beyond this rank the exhaustive embedding search is not attempted.
constexpr int kMaxFormRank = 12;

i64 sgn(i64 v) { return (v > 0) - (v < 0); }

std::string pair_str(const char* head, i64 a, i64 b) {
  return std::string(head) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

struct FormChoice {
  std::string name;
  GramMatrix gram;
  i64 native_slope = 0;
};

// Fig-3 parameters (a0, a1) for a positive knot T_{a0 a1 + 1, a1}.
std::optional<std::pair<int, int>> fig3_params(const TorusKnot& k) {
  if (k.p <= 0 || k.p % k.q != 1) return std::nullopt;
  if (k.p > std::numeric_limits<int>::max()) return std::nullopt;
  return std::pair<int, int>{static_cast<int>((k.p - 1) / k.q), static_cast<int>(k.q)};
}

std::optional<FormChoice> builtin_form(const Splice& y) {
  const i64 n = h1_order(y);
  if (equivalent(y, Splice::make(3, 5, -3, 5)))
    return FormChoice{"L35-white", goeritz::goeritz_matrix(goeritz::l35_white()), n};
  for (int orient : {1, -1}) {
    Splice z = orient > 0 ? y : y.mirror();
    auto f = fig3_params(z.first), s = fig3_params(z.second);
    if (!f || !s) continue;
    std::string name = "fig3-black(" + std::to_string(f->first) + "," + std::to_string(f->second) + "," +
                       std::to_string(s->first) + "," + std::to_string(s->second) + ")";
    auto graph = goeritz::fig3_black(f->first, f->second, s->first, s->second);
    // black-graph forms speak about -n; the mirror reverses orientation
    return FormChoice{name, goeritz::goeritz_matrix(graph), -orient * n};
  }
  return std::nullopt;
}

} // namespace

TorusKnot TorusKnot::make(i64 p, i64 q) {
  if (p == 0 || q == 0) throw DomainError("torus knot indices must be nonzero");
  i64 ap = checked_abs(p), aq = checked_abs(q);
  if (std::gcd(ap, aq) != 1) throw DomainError("torus knot indices must be coprime");
  i64 sign = (p < 0) != (q < 0) ? -1 : 1;
  return {sign * std::max(ap, aq), std::min(ap, aq)};
}

std::string TorusKnot::str() const { return pair_str("T", p, q); }

Splice Splice::make(i64 a, i64 b, i64 c, i64 d) { return make(TorusKnot::make(a, b), TorusKnot::make(c, d)); }

Splice Splice::make(TorusKnot first, TorusKnot second) {
  if (first.is_trivial() || second.is_trivial()) throw DomainError("splice factors must be nontrivial torus knots");
  return {first, second};
}

std::string Splice::str() const { return "Y(" + first.str() + "," + second.str() + ")"; }

bool equivalent(const Splice& x, const Splice& y, bool* mirrored) {
  auto same = [](const Splice& u, const Splice& v) { return u == v || u == v.swapped(); };
  if (same(x, y)) {
    if (mirrored) *mirrored = false;
    return true;
  }
  if (same(x.mirror(), y)) {
    if (mirrored) *mirrored = true;
    return true;
  }
  return false;
}

i64 h1_order(const Splice& y) {
  return checked_abs(checked_sub(checked_mul(y.first.product(), y.second.product()), 1));
}

std::pair<Rational, Rational> linking_self(const Splice& y) {
  const i64 ab = y.first.product(), cd = y.second.product();
  const i64 denom = checked_sub(checked_mul(ab, cd), 1);
  return {Rational(checked_neg(cd), denom).mod_one(), Rational(checked_neg(ab), denom).mod_one()};
}

const char* to_string(Residue r) { return r == Residue::Obstructed ? "Obstructed" : "Inconclusive"; }

IntegralResult integral_obstruction(const Splice& y, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const i64 ab = y.first.product(), cd = y.second.product();
  const i64 n = h1_order(y);
  // slope sign*n equals t*(abcd - 1)
  const i64 t = sign * sgn(checked_sub(checked_mul(ab, cd), 1));
  auto on_ab = nt::is_square_mod(t * ab, n);
  auto on_cd = nt::is_square_mod(t * cd, n);
  if (on_ab.square != on_cd.square) throw std::logic_error("ab and cd residue tests disagree");
  IntegralResult r;
  r.slope = sign * n;
  r.verdict = on_ab.square ? Residue::Inconclusive : Residue::Obstructed;
  r.witness = on_ab.witness;
  r.witness_cd = on_cd.witness;
  return r;
}

std::vector<NonintegralMatch> nonintegral_matches(const Splice& y) {
  std::vector<NonintegralMatch> out;
  for (int orient : {1, -1}) {
    const Splice z = orient > 0 ? y : y.mirror();
    for (const auto& [two, other] : {std::pair{z.first, z.second}, std::pair{z.second, z.first}}) {
      if (two.q != 2) continue;
      // T_{2,-(2m-1)} has canonical form (-(2m-1), 2)
      const i64 m = (1 - two.p) / 2;
      for (i64 l : {other.q, -other.q, checked_abs(other.p), -checked_abs(other.p)}) {
        const i64 lm1 = checked_sub(checked_mul(l, m), 1);
        if (lm1 == 0) continue;
        if (TorusKnot::make(l, lm1) != other) continue;
        NonintegralMatch match{l, m, orient};
        if (std::find(out.begin(), out.end(), match) == out.end()) out.push_back(match);
      }
    }
  }
  return out;
}

std::optional<NonintegralMatch> nonintegral_classification(const Splice& y) {
  auto all = nonintegral_matches(y);
  if (all.empty()) return std::nullopt;
  auto key = [](const NonintegralMatch& x) {
    return std::tuple(x.orientation < 0, x.m <= 0, x.l <= 0, checked_abs(x.l), checked_abs(x.m));
  };
  return *std::min_element(all.begin(), all.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

i64 slope_distance(const Rational& a, const Rational& b) {
  return checked_abs(checked_sub(checked_mul(a.num(), b.den()), checked_mul(b.num(), a.den())));
}

EMKnot EMKnot::make(i64 l, i64 m, i64 n, i64 p) {
  if (n != 0 && p != 0) throw DomainError("Eudave-Munoz knots need n = 0 or p = 0");
  return {l, m, n, p};
}

bool EMKnot::degenerate() const { return (l >= -1 && l <= 1) || m == 0 || m == 1; }

std::string EMKnot::str() const {
  return "k(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
}

Rational em_slope(const EMKnot& k) {
  const i64 base = checked_mul(checked_mul(k.l, checked_sub(checked_mul(2, k.m), 1)), checked_sub(1, checked_mul(k.l, k.m)));
  Rational r(checked_sub(checked_mul(2, base), 1), 2);
  const i64 lm2 = checked_mul(2, checked_mul(k.l, k.m));
  if (k.p == 0) {
    const i64 s = checked_sub(lm2, 1);
    r += Rational(checked_mul(k.n, checked_mul(s, s)));
  } else {
    const i64 s = checked_sub(checked_sub(lm2, k.l), 1);
    r += Rational(checked_mul(k.p, checked_mul(s, s)));
  }
  return r;
}

bool em_su2_cyclic(const EMKnot& k) {
  if (k.p == 0 && (k.n == 0 || k.n == 1)) return true;
  if (k.n == 0) {
    const i64 d = checked_sub(checked_mul(2, k.p), 1);
    return k.l % d == 0;
  }
  return false;
}

std::optional<Splice> em_splice_form(const EMKnot& k) {
  if (!em_su2_cyclic(k)) throw DomainError(k.str() + " is not SU(2)-cyclic");
  const i64 lm = checked_mul(k.l, k.m);
  const i64 two_m = checked_mul(2, k.m);
  if (k.n == 0 && k.p == 0) return Splice::make(k.l, lm - 1, 2, -(two_m - 1));
  if (k.n == 1) return Splice::make(-k.l, lm - 1, 2, two_m + 1);
  if (k.p == 1) return Splice::make(-k.l, lm - k.l - 1, 2, two_m - 1);
  return std::nullopt;
}

Braid twisted_torus_braid(i64 q) {
  if (q < 1) throw DomainError("twisted torus braid needs q >= 1");
  const i64 wide = checked_add(checked_mul(6, q), 3);
  const i64 reps = checked_add(checked_mul(6, checked_mul(q, q)), checked_add(checked_mul(6, q), 1));
  const i64 narrow_run = checked_add(checked_mul(2, q), 1);
  if (checked_mul(wide, reps) > (i64{1} << 28)) throw RangeError("braid word too long");
  Braid b;
  b.strands = static_cast<int>(wide + 1);
  b.word.reserve(static_cast<size_t>(wide * reps + 2 * narrow_run));
  for (i64 r = 0; r < reps; ++r)
    for (i64 i = wide; i >= 1; --i) b.word.push_back(static_cast<int>(i));
  for (int r = 0; r < 2; ++r)
    for (i64 i = narrow_run; i >= 1; --i) b.word.push_back(static_cast<int>(i));
  b.twisted_torus_params = {wide + 1, reps, 2 * q + 2, 2};
  return b;
}

std::string LensSpace::str() const { return pair_str("L", p, q); }

std::string Manifold::str() const {
  switch (kind) {
  case Kind::Lens: return lens.at(0).str();
  case Kind::LensSum: return lens.at(0).str() + "#" + lens.at(1).str();
  case Kind::Seifert: {
    std::string s = "SFS[S2(";
    for (size_t i = 0; i < base_orders.size(); ++i) s += (i ? "," : "") + std::to_string(base_orders[i]);
    return s + ")]";
  }
  }
  return {};
}

namespace {

Manifold lens(i64 p, i64 q) { return {Manifold::Kind::Lens, {{p, q}}, {}, checked_abs(p)}; }

Manifold lens_sum(LensSpace a, LensSpace b) {
  return {Manifold::Kind::LensSum, {a, b}, {}, checked_mul(checked_abs(a.p), checked_abs(b.p))};
}

void check_cable(i64 p, i64 q) {
  if (q < 2) throw DomainError("cable parameters need q >= 2");
  if (p == 0 || std::gcd(checked_abs(p), q) != 1) throw DomainError("cable parameters must be coprime");
}

} // namespace

IteratedTorusKnot IteratedTorusKnot::make(i64 p1, i64 q1, std::vector<std::pair<i64, i64>> cables) {
  check_cable(p1, q1);
  if (p1 == 1 || p1 == -1) throw DomainError("base torus knot is trivial");
  for (auto [p, q] : cables) check_cable(p, q);
  IteratedTorusKnot k;
  k.base = {p1, q1};
  k.cables = std::move(cables);
  return k;
}

IteratedTorusKnot IteratedTorusKnot::parse(const std::string& spec) {
  static const std::regex item(R"(\s*([CT])\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
  std::vector<std::pair<i64, i64>> outer_first;
  std::optional<std::pair<i64, i64>> base;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t semi = spec.find(';', start);
    std::string token = spec.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    std::smatch m;
    if (!std::regex_match(token, m, item)) throw ParseError("bad knot spec item '" + token + "'");
    if (base) throw ParseError("T(p,q) must be the last item");
    std::pair<i64, i64> v;
    try {
      v = {std::stoll(m[2]), std::stoll(m[3])};
    } catch (const std::out_of_range&) {
      throw ParseError("knot parameter out of range");
    }
    if (m[1] == "T")
      base = v;
    else
      outer_first.push_back(v);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (!base) throw ParseError("knot spec must end with T(p,q)");
  std::reverse(outer_first.begin(), outer_first.end());
  return make(base->first, base->second, std::move(outer_first));
}

std::string IteratedTorusKnot::str() const {
  std::string s;
  for (auto it = cables.rbegin(); it != cables.rend(); ++it) s += pair_str("C", it->first, it->second) + ";";
  return s + pair_str("T", base.p, base.q);
}

Rational CableSlope::slope_at(i64 m) const {
  if (!parametric) return slope;
  if (m == 0) throw DomainError("family parameter m must be nonzero");
  return Rational(checked_add(checked_mul(m, pq), 1), m);
}

Manifold CableSlope::manifold_at(i64 m) const {
  if (!parametric) return manifold;
  if (m == 0) throw DomainError("family parameter m must be nonzero");
  return lens(checked_add(checked_mul(m, pq), 1), checked_mul(m, checked_mul(q, q)));
}

std::string CableSlope::family() const {
  return parametric ? std::to_string(pq) + "+1/m" : slope.str();
}

std::vector<CableSlope> cable_su2_cyclic_slopes(const IteratedTorusKnot& k) {
  const i64 p1 = k.base.p, q1 = k.base.q;
  const i64 pq = checked_mul(p1, q1);
  std::vector<CableSlope> out;
  if (k.cables.empty()) {
    CableSlope fam;
    fam.parametric = true;
    fam.pq = pq;
    fam.p = p1;
    fam.q = q1;
    out.push_back(fam);
    if (checked_abs(p1) == 2 || q1 == 2) {
      CableSlope red;
      red.pq = pq;
      red.p = p1;
      red.q = q1;
      red.slope = Rational(pq);
      red.manifold = lens_sum({p1, q1}, {q1, p1});
      out.push_back(red);
    }
    return out;
  }
  if (k.cables.size() > 1) return out;
  auto [p2, q2] = k.cables[0];
  const i64 eps = checked_sub(p2, checked_mul(2, pq));
  if (q2 != 2 || (eps != 1 && eps != -1)) return out;
  const i64 four_pq = checked_mul(4, pq);
  CableSlope lens_row;
  lens_row.pq = pq;
  lens_row.p = p1;
  lens_row.q = q1;
  lens_row.slope = Rational(four_pq + eps);
  lens_row.manifold = lens(four_pq + eps, checked_mul(4, checked_mul(q1, q1)));
  out.push_back(lens_row);
  CableSlope sum_row = lens_row;
  sum_row.slope = Rational(four_pq + 2 * eps);
  sum_row.manifold = lens_sum({checked_mul(2, pq) + eps, checked_mul(2, checked_mul(q1, q1))}, {2, 1});
  out.push_back(sum_row);
  return out;
}

Manifold torus_knot_surgery(i64 p, i64 q, const Rational& r) {
  if (TorusKnot::make(p, q).is_trivial()) throw DomainError("torus knot is trivial");
  const i64 pq = checked_mul(p, q);
  const i64 delta = slope_distance(r, Rational(pq));
  if (delta == 0) return lens_sum({p, q}, {q, p});
  if (delta == 1) {
    // r = pq + 1/m
    const i64 m = r.den() / checked_sub(r.num(), checked_mul(pq, r.den()));
    return lens(checked_add(checked_mul(m, pq), 1), checked_mul(m, checked_mul(q, q)));
  }
  Manifold sfs;
  sfs.kind = Manifold::Kind::Seifert;
  sfs.base_orders = {checked_abs(p), checked_abs(q), delta};
  sfs.h1 = checked_abs(r.num());
  return sfs;
}

const char* to_string(Overall o) {
  switch (o) {
  case Overall::NotAnySurgery: return "NotAnySurgery";
  case Overall::NonIntegralRealization: return "NonIntegralRealization";
  case Overall::Undecided: return "Undecided";
  }
  return "";
}

Verdict not_surgery_verdict(const Splice& y, bool with_changemaker) {
  Verdict v;
  v.splice = y;
  v.h1 = h1_order(y);
  v.linking = linking_self(y);
  v.nonintegral = nonintegral_classification(y);
  if (v.nonintegral) {
    Rational r = em_slope(EMKnot::make(v.nonintegral->l, v.nonintegral->m, 0, 0));
    v.nonintegral_slope = r < Rational(0) ? -r : r;
  }
  v.integral_plus = integral_obstruction(y, 1);
  v.integral_minus = integral_obstruction(y, -1);

  if (y.second == y.first.mirror() && y.first.q >= 3)
    v.shortcuts.push_back({"S", checked_abs(y.first.product()), nt::in_S(checked_abs(y.first.product()))});
  if (y.first == y.second)
    v.shortcuts.push_back({"Sprime", checked_abs(y.first.product()), nt::in_Sprime(checked_abs(y.first.product()))});

  if (with_changemaker) {
    auto form = builtin_form(y);
    if (!form) {
      v.changemaker.status = "no-form-available";
    } else {
      v.changemaker.form = form->name;
      v.changemaker.slopes.push_back(form->native_slope);
      if (equivalent(y, y.mirror())) v.changemaker.slopes.push_back(-form->native_slope);
      if (form->gram.rank() > kMaxFormRank) {
        v.changemaker.status = "form-too-large";
      } else {
        auto res = lattice::changemaker_obstruction(form->gram, v.h1);
        v.changemaker.changemakers_tested = res.changemakers_tested;
        v.changemaker.status = res.obstructed ? "obstructed" : "witness";
        if (!res.witnesses.empty()) v.changemaker.witness = res.witnesses.front();
      }
    }
  }

  auto lattice_rules_out = [&](i64 slope) {
    const auto& s = v.changemaker.slopes;
    return v.changemaker.status == "obstructed" && std::find(s.begin(), s.end(), slope) != s.end();
  };
  v.plus_ruled_out = v.integral_plus.verdict == Residue::Obstructed || lattice_rules_out(v.integral_plus.slope);
  v.minus_ruled_out = v.integral_minus.verdict == Residue::Obstructed || lattice_rules_out(v.integral_minus.slope);
  if (v.nonintegral)
    v.overall = Overall::NonIntegralRealization;
  else if (v.plus_ruled_out && v.minus_ruled_out)
    v.overall = Overall::NotAnySurgery;
  else
    v.overall = Overall::Undecided;
  return v;
}

} // namespace obstruct::mf
