#include <doctest.h>

#include <random>

#include "obstruct/errors.hpp"
#include "obstruct/numtheory.hpp"
#include "oracles.hpp"

using namespace obstruct;
using namespace obstruct::nt;

namespace {

std::map<i64, int> as_map(const Factorization& f) {
  std::map<i64, int> m;
  for (const auto& pp : f.factors) m[pp.prime] = pp.exponent;
  return m;
}

} // namespace

TEST_CASE("factor: small values") {
  CHECK(as_map(factor(226)) == oracle::trial_factor(226));
  CHECK(factor(1).factors.empty());
  CHECK(as_map(factor(37)) == oracle::trial_factor(37));
  CHECK_THROWS_AS(factor(0), DomainError);
  CHECK_THROWS_AS(factor(-5), DomainError);
}

TEST_CASE("factor: agrees with trial division and reassembles") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    i64 n = static_cast<i64>(rng() % 50'000'000) + 1;
    auto f = factor(n);
    CHECK(f.product() == n);
    CHECK(as_map(f) == oracle::trial_factor(n));
  }
}

TEST_CASE("factor: large semiprimes and prime powers") {
  const i64 p = 1'000'000'007, q = 998'244'353;
  auto f = factor(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == q);
  CHECK(f.factors[1].prime == p);
  CHECK(factor(i64{1} << 62).factors == std::vector<PrimePower>{{2, 62}});
  const i64 big_prime = 9'223'372'036'854'775'783LL; // largest prime below 2^63
  CHECK(factor(big_prime).factors == std::vector<PrimePower>{{big_prime, 1}});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    i64 n = static_cast<i64>(rng() >> 1) + 1;
    auto fn = factor(n);
    CHECK(fn.product() == n);
    for (size_t k = 0; k < fn.factors.size(); ++k) {
      CHECK(is_prime(static_cast<u64>(fn.factors[k].prime)));
      if (k) CHECK(fn.factors[k - 1].prime < fn.factors[k].prime);
    }
  }
}

TEST_CASE("is_prime matches trial division below 10^5") {
  for (i64 n = 0; n < 100'000; ++n) CHECK(is_prime(static_cast<u64>(n)) == oracle::trial_prime(n));
}

TEST_CASE("legendre: examples and domain") {
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 3) == 0);
  CHECK(legendre(2, 3) == -1);
  CHECK_THROWS_AS(legendre(2, 9), DomainError);
  CHECK_THROWS_AS(legendre(2, 2), DomainError);
  CHECK_THROWS_AS(legendre(1, 1), DomainError);
}

TEST_CASE("legendre agrees with Euler's criterion") {
  for (i64 p = 3; p < 400; p += 2) {
    if (!oracle::trial_prime(p)) continue;
    for (i64 a = -p; a <= 2 * p; ++a) CHECK(legendre(a, p) == oracle::euler_legendre(a, p));
  }
}

TEST_CASE("quadratic reciprocity for odd primes up to 500") {
  std::vector<i64> primes;
  for (i64 p = 3; p <= 500; p += 2)
    if (oracle::trial_prime(p)) primes.push_back(p);
  for (i64 p : primes)
    for (i64 q : primes) {
      if (p == q) continue;
      int sign = (((p - 1) / 2) * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
      CHECK(legendre(p, q) * legendre(q, p) == sign);
    }
}

TEST_CASE("is_square_mod: examples") {
  CHECK_FALSE(is_square_mod(6, 11));
  auto r = is_square_mod(4, 21);
  CHECK(r.square);
  CHECK(r.witness == 2);
  auto s = is_square_mod(-6, 35);
  CHECK(s.square);
  CHECK(s.witness == 22);
  CHECK_THROWS_AS(is_square_mod(1, 0), DomainError);
}

TEST_CASE("is_square_mod agrees with a brute-force scan for n <= 2000") {
  for (i64 n = 1; n <= 2000; ++n) {
    auto table = oracle::square_table(n);
    for (i64 a = 0; a < n; ++a) {
      auto r = is_square_mod(a, n);
      REQUIRE(r.square == table[a]);
      if (r.square) {
        REQUIRE(r.witness.has_value());
        i64 x = *r.witness;
        REQUIRE(x >= 0);
        REQUIRE(x < n);
        REQUIRE(x * x % n == a);
      }
    }
  }
}

TEST_CASE("is_square_mod: high powers of two and mixed moduli") {
  for (int k = 1; k <= 40; ++k) {
    const i64 n = i64{1} << k;
    for (i64 a : {1LL, 3LL, 5LL, 7LL, 9LL, 17LL, 4LL, 8LL, 12LL, 16LL, 36LL, 25LL * 4, 2LL, 32LL, 64LL}) {
      auto r = is_square_mod(a, n);
      if (r.square) {
        __int128 x = *r.witness;
        CHECK((x * x - a) % n == 0);
      }
      // 2-adic criterion on the odd part after stripping an even power of two
      i64 v = a % n, e = 0;
      if (v == 0) {
        CHECK(r.square);
        continue;
      }
      while (v % 2 == 0) {
        v /= 2;
        ++e;
      }
      const int rest = k - static_cast<int>(e);
      bool expected = e % 2 == 0 && (rest <= 1 || (rest == 2 ? v % 4 == 1 : v % 8 == 1));
      CHECK(r.square == expected);
    }
  }
}

TEST_CASE("chi8m: examples, domain and cap") {
  CHECK(chi8m(3, 1) == -1);
  CHECK(chi8m(1, 1) == 1);
  CHECK(chi8m(11, 3) == -1);
  CHECK_THROWS_AS(chi8m(2, 1), DomainError);
  CHECK_THROWS_AS(chi8m(3, 3), DomainError);
  CHECK_THROWS_AS(chi8m(1, 2), DomainError);
  CHECK_THROWS_AS(chi8m(1, 1, 10), ResourceError);
}

TEST_CASE("chi8m(4m-1, m) = -1 for odd m <= 199") {
  for (i64 m = 1; m <= 199; m += 2) CHECK(chi8m(4 * m - 1, m) == -1);
}

TEST_CASE("(2m/p) depends only on p mod 8m") {
  std::vector<i64> primes;
  for (i64 p = 3; p < 10'000; p += 2)
    if (oracle::trial_prime(p)) primes.push_back(p);
  for (i64 m = 1; m <= 30; m += 2) {
    std::map<i64, int> seen;
    for (i64 p : primes) {
      if ((2 * m) % p == 0) continue;
      int value = oracle::euler_legendre(2 * m, p);
      auto [it, inserted] = seen.emplace(p % (8 * m), value);
      CHECK(it->second == value);
      CHECK(legendre(2 * m, p) == value);
    }
  }
}

TEST_CASE("chi8m is multiplicative on units") {
  std::mt19937 rng(3);
  for (i64 m = 1; m <= 30; m += 2) {
    const i64 mod = 8 * m;
    std::vector<i64> units;
    for (i64 a = 1; a < mod; ++a)
      if (oracle::gcd(a, mod) == 1) units.push_back(a);
    for (int t = 0; t < 100; ++t) {
      i64 a = units[rng() % units.size()], b = units[rng() % units.size()];
      CHECK(chi8m(a * b % mod, m) == chi8m(a, m) * chi8m(b, m));
    }
  }
}

TEST_CASE("2m is never a square modulo 4mn - 1") {
  for (i64 m = 1; m <= 99; m += 2)
    for (i64 n = 1; n <= 99; n += 2) CHECK_FALSE(is_square_mod(2 * m, 4 * m * n - 1));
}

TEST_CASE("in_S and in_Sprime: examples") {
  CHECK_FALSE(in_S(6));
  CHECK(in_S(15));
  CHECK(in_S(1));
  CHECK_FALSE(in_Sprime(10));
  CHECK_FALSE(in_Sprime(8));
  CHECK(in_Sprime(2));
  CHECK_THROWS_AS(in_Sprime(1), DomainError);
  CHECK_THROWS_AS(in_S(0), DomainError);
  CHECK_THROWS_AS(in_S(i64{1} << 40), RangeError);
}

TEST_CASE("in_S and in_Sprime agree with trial-division oracles") {
  for (i64 n = 1; n <= 20'000; ++n) REQUIRE(in_S(n) == oracle::in_S(n));
  for (i64 n = 2; n <= 20'000; ++n) REQUIRE(in_Sprime(n) == oracle::in_Sprime(n));
}

TEST_CASE("membership shortcuts up to 10^5") {
  for (i64 n = 1; n <= 100'000; ++n) {
    const i64 r8 = n % 8, r12 = n % 12;
    if (r8 == 2 || r8 == 3 || r8 == 5 || r8 == 6) REQUIRE_FALSE(in_S(n));
    if (n >= 2 && (r12 == 8 || r12 == 10)) REQUIRE_FALSE(in_Sprime(n));
  }
}

TEST_CASE("ResiduePredicateSet parsing") {
  CHECK(ResiduePredicateSet::parse("S").kind == ResiduePredicateSet::Kind::S);
  CHECK(ResiduePredicateSet::parse("Sprime").kind == ResiduePredicateSet::Kind::Sprime);
  CHECK(ResiduePredicateSet::parse("Sk:3").k == 3);
  CHECK(ResiduePredicateSet::parse("Tk:0").kind == ResiduePredicateSet::Kind::Tk);
  CHECK(ResiduePredicateSet::parse("all").kind == ResiduePredicateSet::Kind::All);
  CHECK_THROWS_AS(ResiduePredicateSet::parse("Sk:-1"), DomainError);
  CHECK_THROWS_AS(ResiduePredicateSet::parse("Sk:x"), ParseError);
  CHECK_THROWS_AS(ResiduePredicateSet::parse("Q"), ParseError);
}

TEST_CASE("density: examples") {
  CHECK(density(ResiduePredicateSet::all(), 10) == Rational(1));
  i64 enumerated = 0;
  for (i64 n = 1; n <= 100; ++n) enumerated += oracle::in_S(n);
  CHECK(density(ResiduePredicateSet::s(), 100) == Rational(enumerated, 100));
  CHECK(density(ResiduePredicateSet::sk(1), 25) == Rational(3, 5));
  CHECK(density(ResiduePredicateSet::sk(0), 10) == Rational(1));
  CHECK_THROWS_AS(density(ResiduePredicateSet::s(), 0), DomainError);
}

TEST_CASE("density sieves agree with pointwise membership") {
  for (i64 limit : {1, 2, 3, 50, 999, 30'000}) {
    i64 s = 0, sp = 0;
    for (i64 n = 1; n <= limit; ++n) {
      s += oracle::in_S(n);
      if (n >= 2) sp += oracle::in_Sprime(n);
    }
    CHECK(count_members(ResiduePredicateSet::s(), limit) == s);
    CHECK(count_members(ResiduePredicateSet::sprime(), limit) == sp);
  }
}

TEST_CASE("product_bound: examples") {
  using Kind = ResiduePredicateSet::Kind;
  CHECK(product_bound(Kind::Sk, 0) == Rational(1));
  CHECK(product_bound(Kind::Sk, 1) == Rational(3, 5));
  CHECK(product_bound(Kind::Sk, 2) == Rational(33, 65));
  CHECK(product_bound(Kind::Tk, 2) == Rational(2, 3) * Rational(6, 7));
  CHECK(primes_in_progression(5, 8, 4) == std::vector<i64>{5, 13, 29, 37});
  CHECK(primes_in_progression(3, 4, 4) == std::vector<i64>{3, 7, 11, 19});
}

TEST_CASE("S_k and T_k are periodic with density equal to the product bound") {
  using Kind = ResiduePredicateSet::Kind;
  for (int k = 0; k <= 3; ++k) {
    for (Kind kind : {Kind::Sk, Kind::Tk}) {
      auto set = kind == Kind::Sk ? ResiduePredicateSet::sk(k) : ResiduePredicateSet::tk(k);
      auto primes = kind == Kind::Sk ? primes_in_progression(5, 8, k) : primes_in_progression(3, 4, k);
      i64 period = 1;
      for (i64 p : primes) period *= p;
      CHECK(density(set, period) == product_bound(kind, k));
      for (i64 n = 1; n <= 3 * period && n <= 5000; ++n) CHECK(set.contains(n) == set.contains(n + period));
    }
  }
}

TEST_CASE("S is contained in every S_k") {
  for (i64 n = 1; n <= 5000; ++n)
    if (in_S(n))
      for (int k = 0; k <= 4; ++k) CHECK(ResiduePredicateSet::sk(k).contains(n));
}
