#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/checked.hpp"
#include "obstruct/rational.hpp"

/// Exact integer number theory used by the residue obstructions.
namespace obstruct::nt {

struct PrimePower {
  i64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  i64 value = 1;
  std::vector<PrimePower> factors; // primes strictly increasing

  /// Recomputes the product of the listed prime powers.
  i64 product() const;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Complete factorization of n >= 1 (trial division, then Pollard-rho).
Factorization factor(i64 n);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(i64 a, i64 n);

/// Legendre symbol (a/p); throws DomainError unless p is an odd prime.
int legendre(i64 a, i64 p);

struct SquareModResult {
  bool square = false;
  std::optional<i64> witness; // x in [0, n) with x^2 = a (mod n) when square

  explicit operator bool() const { return square; }
};

/// Decides whether a is a square modulo n >= 1 and returns a witness root.
///
/// The witness is deterministic: if the least nonnegative residue of a is
/// itself a perfect square its integer root is returned, otherwise the CRT
/// combination of the smallest root modulo each prime-power factor.
SquareModResult is_square_mod(i64 a, i64 n);

inline constexpr i64 kDefaultChiSearchCap = 10'000'000;

/// The quadratic character chi_{8m}(a) = (2m/p) for a prime p = a (mod 8m).
///
/// m must be odd and positive and gcd(a, 8m) = 1 (DomainError otherwise).
/// The smallest qualifying prime below search_cap is used; ResourceError is
/// thrown if there is none.
int chi8m(i64 a, i64 m, i64 search_cap = kDefaultChiSearchCap);

/// Every odd prime divisor of n^2 + 1 is 1 mod 8.
bool in_S(i64 n);

/// No prime divisor of n - 1 is 3 mod 4, or no prime divisor of n + 1 is.
/// Requires n >= 2.
bool in_Sprime(i64 n);

/// Residue-class sets whose densities bound S and S'.
struct ResiduePredicateSet {
  enum class Kind { All, S, Sprime, Sk, Tk };

  Kind kind = Kind::All;
  int k = 0; // Sk / Tk only

  static ResiduePredicateSet all() { return {Kind::All, 0}; }
  static ResiduePredicateSet s() { return {Kind::S, 0}; }
  static ResiduePredicateSet sprime() { return {Kind::Sprime, 0}; }
  static ResiduePredicateSet sk(int k);
  static ResiduePredicateSet tk(int k);

  /// Parses "S", "Sprime", "Sk:<k>", "Tk:<k>" or "all".
  static ResiduePredicateSet parse(const std::string& text);

  bool contains(i64 n) const;
  std::string name() const;
};

/// The first `count` primes congruent to `residue` modulo `modulus`.
std::vector<i64> primes_in_progression(i64 residue, i64 modulus, int count);

/// |{1..limit} ∩ set| / limit, exact.
Rational density(const ResiduePredicateSet& set, i64 limit);

/// Number of elements of the set in {1..limit}.
i64 count_members(const ResiduePredicateSet& set, i64 limit);

/// prod (1 - 2/p_i) over the first k primes 5 mod 8 (Sk), or
/// prod (1 - 1/p_i) over the first k primes 3 mod 4 (Tk).
Rational product_bound(ResiduePredicateSet::Kind kind, int k);

} // namespace obstruct::nt
