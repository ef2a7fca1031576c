#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obstruct/lattice.hpp"
#include "obstruct/rational.hpp"

/// Torus knots, splices of torus-knot exteriors, Eudave-Munoz knots and the
/// surgery verdict pipeline.
namespace obstruct::mf {

/// Stored canonically: q = min(|p|,|q|), p = sign(pq) * max(|p|,|q|).
struct TorusKnot {
  i64 p = 0;
  i64 q = 1;

  /// Requires nonzero coprime entries.
  static TorusKnot make(i64 p, i64 q);

  bool is_trivial() const { return q == 1; }
  TorusKnot mirror() const { return {-p, q}; }
  i64 product() const { return p * q; }
  std::string str() const;

  friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;
};

/// Y(T_{a,b}, T_{c,d}); both knots nontrivial.
struct Splice {
  TorusKnot first;
  TorusKnot second;

  static Splice make(i64 a, i64 b, i64 c, i64 d);
  static Splice make(TorusKnot first, TorusKnot second);

  Splice swapped() const { return {second, first}; }
  Splice mirror() const { return {first.mirror(), second.mirror()}; }
  std::string str() const;

  friend bool operator==(const Splice&, const Splice&) = default;
};

/// Same splice up to factor swap and a simultaneous mirror of both factors.
/// `mirrored` reports whether the mirror was needed.
bool equivalent(const Splice& x, const Splice& y, bool* mirrored = nullptr);

/// |abcd - 1|.
i64 h1_order(const Splice& y);

/// (-cd/(abcd-1), -ab/(abcd-1)) reduced into [0,1).
std::pair<Rational, Rational> linking_self(const Splice& y);

enum class Residue { Obstructed, Inconclusive };
const char* to_string(Residue r);

struct IntegralResult {
  Residue verdict = Residue::Obstructed;
  i64 slope = 0;                // sign * h1_order
  std::optional<i64> witness;   // x with x^2 = t*ab (mod n)
  std::optional<i64> witness_cd;
};

/// Linking-form test of the integral slope sign * |abcd - 1|.
IntegralResult integral_obstruction(const Splice& y, int sign);

struct NonintegralMatch {
  i64 l = 0;
  i64 m = 0;
  int orientation = 1; // -1 when the match needs the global mirror
  friend bool operator==(const NonintegralMatch&, const NonintegralMatch&) = default;
};

/// Every (l, m, orientation) with y equivalent to
/// orientation * Y(T_{l,lm-1}, T_{2,-(2m-1)}).
std::vector<NonintegralMatch> nonintegral_matches(const Splice& y);

/// Preferred entry of nonintegral_matches: orientation +1, then m > 0, then
/// l > 0, then smallest |l|, |m|.
std::optional<NonintegralMatch> nonintegral_classification(const Splice& y);

/// Delta(p1/q1, p2/q2) = |p1 q2 - p2 q1|.
i64 slope_distance(const Rational& a, const Rational& b);

struct EMKnot {
  i64 l = 0, m = 0, n = 0, p = 0;

  /// Requires n * p == 0.
  static EMKnot make(i64 l, i64 m, i64 n, i64 p);

  /// l in {-1,0,1} or m in {0,1}: the knot may degenerate.
  bool degenerate() const;
  std::string str() const;
};

Rational em_slope(const EMKnot& k);
bool em_su2_cyclic(const EMKnot& k);

/// Splice form of an SU(2)-cyclic surgery, up to orientation; nullopt when
/// p is not 0 or 1.  DomainError when k is not SU(2)-cyclic or a factor of
/// the form is a trivial knot.
std::optional<Splice> em_splice_form(const EMKnot& k);

struct Braid {
  int strands = 0;
  std::vector<int> word; // positive generators sigma_i, 1-based
  std::vector<i64> twisted_torus_params;
};

/// Positive braid of the twisted torus knot T(6q+4, 6q^2+6q+1, 2q+2, 2).
Braid twisted_torus_braid(i64 q);

struct LensSpace {
  i64 p = 0, q = 0; // L(p, q); q is not reduced
  std::string str() const;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

struct Manifold {
  enum class Kind { Lens, LensSum, Seifert };
  Kind kind = Kind::Lens;
  std::vector<LensSpace> lens;   // one entry, or two for a connected sum
  std::vector<i64> base_orders;  // Seifert only
  i64 h1 = 0;                    // |H1|
  std::string str() const;
};

struct IteratedTorusKnot {
  TorusKnot base;                               // as given: (p1, q1), q1 >= 2
  std::vector<std::pair<i64, i64>> cables;       // innermost first

  /// Checks the hypotheses: gcd(p_i,q_i) = 1, q_i >= 2, |p1| != 1.
  static IteratedTorusKnot make(i64 p1, i64 q1, std::vector<std::pair<i64, i64>> cables);

  /// "C(m,n);...;T(p,q)" with the outermost cable first.
  static IteratedTorusKnot parse(const std::string& spec);
  std::string str() const;
};

struct CableSlope {
  // Parametric entries are the family pq + 1/m, m != 0.
  bool parametric = false;
  i64 pq = 0;
  i64 p = 0, q = 0;
  Rational slope;    // fixed slope when not parametric
  Manifold manifold; // fixed manifold when not parametric

  Rational slope_at(i64 m) const;
  Manifold manifold_at(i64 m) const;
  std::string family() const;
};

std::vector<CableSlope> cable_su2_cyclic_slopes(const IteratedTorusKnot& k);

/// r-surgery on T_{p,q} (Moser).  p, q as given, not canonicalized.
Manifold torus_knot_surgery(i64 p, i64 q, const Rational& r);

enum class Overall { NotAnySurgery, NonIntegralRealization, Undecided };
const char* to_string(Overall o);

struct Shortcut {
  std::string set; // "S" or "Sprime"
  i64 n = 0;
  bool member = false;
};

struct ChangemakerCheck {
  std::string status = "not-requested"; // obstructed, witness, no-form-available
  std::string form;                      // builtin diagram name
  std::vector<i64> slopes;               // slopes the form speaks about
  std::optional<lattice::Embedding> witness;
  std::size_t changemakers_tested = 0;
};

struct Verdict {
  Splice splice;
  i64 h1 = 0;
  std::pair<Rational, Rational> linking;
  std::optional<NonintegralMatch> nonintegral;
  std::optional<Rational> nonintegral_slope; // |slope|; orientation not fixed
  IntegralResult integral_plus;
  IntegralResult integral_minus;
  std::vector<Shortcut> shortcuts;
  ChangemakerCheck changemaker;
  bool plus_ruled_out = false;
  bool minus_ruled_out = false;
  Overall overall = Overall::Undecided;
};

Verdict not_surgery_verdict(const Splice& y, bool with_changemaker);

} // namespace obstruct::mf
