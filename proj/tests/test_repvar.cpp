#include <doctest.h>

#include "obstruct/errors.hpp"
#include "obstruct/manifolds.hpp"
#include "obstruct/repvar.hpp"
#include "oracles.hpp"

using namespace obstruct;
using namespace obstruct::repvar;

TEST_CASE("x1_singular_orders") {
  auto a = x1_singular_orders(2, 2, 0);
  CHECK(a.alpha1 == 2);
  CHECK(a.alpha2 == 3);
  auto b = x1_singular_orders(3, 2, 2);
  CHECK(b.alpha1 == 3);
  CHECK(b.alpha2 == 9);
  auto c = x1_singular_orders(2, 3, -1);
  CHECK(c.alpha1 == 2);
  CHECK(c.alpha2 == 13);
}

TEST_CASE("irrep_witness: examples") {
  CHECK_FALSE(irrep_witness(3, 2, 2));
  auto w = irrep_witness(5, 2, 2);
  REQUIRE(w);
  CHECK(w->D == 3);
  CHECK(w->A == 5);
  CHECK(w->q == 1);
  CHECK(w->phi_over_pi == Rational(2, 3));
  CHECK(w->k == 3);
  CHECK(w->extends());
  auto v = irrep_witness(2, 3, -1);
  REQUIRE(v);
  CHECK(v->D == 3);
  CHECK(v->A == 2);
  CHECK(v->q == 1);
  CHECK(v->phi_over_pi == Rational(2, 3));
  CHECK(v->k == 5);
  CHECK_THROWS_AS(irrep_witness(5, 1, 2), DomainError);
  CHECK_THROWS_AS(irrep_witness(5, 0, 2), DomainError);
}

TEST_CASE("irrep_witness sweep against a direct search for q") {
  int witnesses = 0;
  for (i64 l = -10; l <= 10; ++l)
    for (i64 m = -5; m <= 5; ++m) {
      if (std::llabs(m) < 2) continue;
      for (i64 p = -5; p <= 5; ++p) {
        const i64 d2 = 2 * p - 1;
        const bool divides = l % d2 == 0;
        auto w = irrep_witness(l, m, p);
        CHECK(w.has_value() == !divides);
        if (!w) continue;
        ++witnesses;
        const i64 g = oracle::gcd(l, d2);
        const i64 D = std::llabs(d2) / g, A = std::llabs(l) / g;
        const i64 alpha2 = std::llabs((1 - l * m) * d2 + p * l);
        CHECK(w->g == g);
        CHECK(w->D == D);
        CHECK(w->A == A);
        CHECK(w->orders.alpha1 == std::llabs(l));
        CHECK(w->orders.alpha2 == alpha2);
        CHECK(D % 2 == 1);
        CHECK(D >= 3);
        CHECK(oracle::gcd(A, D) == 1);
        i64 q = 0;
        for (i64 c = 1; c <= 2 * D && q == 0; ++c)
          if (oracle::pos_mod(A * c, D) == (D + 1) / 2 && c % 2 == alpha2 % 2) q = c;
        CHECK(w->q == q);
        const Rational phi = w->phi_over_pi;
        CHECK(phi == Rational(oracle::pos_mod(A * q, D), D));
        const Rational half(1, 2), off(1, 2 * D);
        CHECK((phi == half + off || phi == half - off));
        CHECK(phi >= Rational(1, 3));
        CHECK(phi <= Rational(2, 3));
        const i64 k = std::llabs(2 * m - 1);
        CHECK(w->k == k);
        CHECK(phi > Rational(1, 2 * k));
        CHECK(phi < Rational(1) - Rational(1, 2 * k));
        CHECK(w->in_middle_third());
        CHECK(w->extends());
      }
    }
  CHECK(witnesses > 1000);
}

TEST_CASE("small_sfs_su2_abelian") {
  CHECK(small_sfs_su2_abelian({2, 4, 4}, false));
  CHECK(small_sfs_su2_abelian({2, 4, 4}, true));
  CHECK(small_sfs_su2_abelian({3, 3, 3}, true));
  CHECK_FALSE(small_sfs_su2_abelian({3, 3, 3}, false));
  CHECK_FALSE(small_sfs_su2_abelian({2, 3, 5}, false));
}

TEST_CASE("Seifert surgeries on torus knots never have the exceptional base orders") {
  for (i64 p = -12; p <= 12; ++p)
    for (i64 q = 2; q <= 12; ++q) {
      if (std::llabs(p) < 2 || oracle::gcd(p, q) != 1) continue;
      for (i64 delta = 2; delta <= 12; ++delta) {
        // slopes pq + delta / s at distance delta from pq
        for (i64 s : {1, 3, 5}) {
          if (oracle::gcd(delta, s) != 1) continue;
          Rational r = Rational(p * q) + Rational(delta, s);
          auto m = mf::torus_knot_surgery(p, q, r);
          REQUIRE(m.kind == mf::Manifold::Kind::Seifert);
          std::array<i64, 3> orders{m.base_orders[0], m.base_orders[1], m.base_orders[2]};
          std::sort(orders.begin(), orders.end());
          CHECK_FALSE(small_sfs_su2_abelian(orders, true));
        }
      }
    }
}
