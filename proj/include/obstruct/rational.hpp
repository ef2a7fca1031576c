#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "obstruct/checked.hpp"

namespace obstruct {

/// Exact reduced fraction with a positive denominator.  All arithmetic is
/// carried out in 128-bit intermediates and throws RangeError if the reduced
/// result leaves the 64-bit range.
class Rational {
public:
  constexpr Rational() = default;
  Rational(i64 value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(i64 num, i64 den) { assign(num, den); }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                     static_cast<i128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
  }

  /// Representative of this value modulo 1, in [0, 1).
  Rational mod_one() const { return {mod(num_, den_), den_}; }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(i128 num, i128 den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  void assign(i64 num, i64 den) { *this = from_wide(num, den); }

  i64 num_ = 0;
  i64 den_ = 1;
};

} // namespace obstruct
