#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "obstruct/errors.hpp"

namespace obstruct {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError("integer overflow in addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw RangeError("integer overflow in subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("integer overflow in multiplication");
  return r;
}

inline i64 checked_neg(i64 a) {
  if (a == std::numeric_limits<i64>::min()) throw RangeError("integer overflow in negation");
  return -a;
}

inline i64 checked_abs(i64 a) { return a < 0 ? checked_neg(a) : a; }

inline i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw RangeError("value exceeds 64-bit range");
  return static_cast<i64>(v);
}

/// Mathematical modulus: result in [0, m) for m > 0.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo m (m >= 1); throws DomainError when gcd(a, m) != 1.
inline i64 invmod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && m != 1) throw DomainError("value is not invertible modulo m");
  return mod(old_s, m);
}

} // namespace obstruct
