#include "obstruct/numtheory.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>

#include "obstruct/errors.hpp"

namespace obstruct::nt {

namespace {

constexpr std::array<u64, 12> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr u64 kTrialLimit = 1u << 12;

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 gcd_u(u64 a, u64 b) { return std::gcd(a, b); }

// Brent's variant of Pollard-rho; n odd composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Tonelli-Shanks: a root of a (a unit square) modulo an odd prime p.
u64 sqrt_mod_prime(u64 a, u64 p) {
  a %= p;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s);
  u64 c = powmod(z, q, p);
  u64 t = powmod(a, q, p);
  u64 r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// Smallest root of the unit u modulo p^k (p odd), if any.
std::optional<u64> unit_root_odd(u64 u, u64 p, int k, u64 pk) {
  if (jacobi(static_cast<i64>(u % p), static_cast<i64>(p)) != 1) return std::nullopt;
  u64 x = sqrt_mod_prime(u, p);
  u64 mod_i = p;
  for (int i = 1; i < k; ++i) {
    u64 next = mod_i * p;
    // x <- x - (x^2 - u) / (2x)  (mod p^{i+1})
    u64 fx = (mulmod(x, x, next) + next - u % next) % next;
    u64 inv = static_cast<u64>(invmod(static_cast<i64>(mulmod(2, x, next)), static_cast<i64>(next)));
    x = (x + next - mulmod(fx, inv, next)) % next;
    mod_i = next;
  }
  (void)pk;
  return std::min(x, mod_i - x);
}

// Smallest root of the odd unit u modulo 2^k, if any.
std::optional<u64> unit_root_two(u64 u, int k) {
  u64 q = u64{1} << k;
  if (k == 1) return 1;
  if (k == 2) return (u % 4 == 1) ? std::optional<u64>(1) : std::nullopt;
  if (u % 8 != 1) return std::nullopt;
  u64 y = 1;
  for (int i = 3; i < k; ++i) {
    u64 next = u64{1} << (i + 1);
    if ((mulmod(y, y, next) + next - u % next) % next != 0) y += u64{1} << (i - 1);
  }
  y %= q;
  u64 half = q / 2;
  std::array<u64, 4> roots = {y, q - y, (y + half) % q, (q - y + half) % q};
  return *std::min_element(roots.begin(), roots.end());
}

// Smallest-root-style representative of sqrt(a) modulo p^k.
std::optional<u64> root_prime_power(u64 a, u64 p, int k, u64 pk) {
  a %= pk;
  if (a == 0) return 0;
  int j = 0;
  u64 u = a;
  while (u % p == 0) {
    u /= p;
    ++j;
  }
  if (j % 2 != 0) return std::nullopt;
  int rest = k - j;
  u64 rest_mod = 1;
  for (int i = 0; i < rest; ++i) rest_mod *= p;
  std::optional<u64> y = (p == 2) ? unit_root_two(u % rest_mod, rest) : unit_root_odd(u % rest_mod, p, rest, rest_mod);
  if (!y) return std::nullopt;
  u64 scale = 1;
  for (int i = 0; i < j / 2; ++i) scale *= p;
  return mulmod(scale, *y, pk);
}

std::vector<char> prime_table(u64 limit) {
  std::vector<char> is_p(limit + 1, 1);
  is_p[0] = 0;
  if (limit >= 1) is_p[1] = 0;
  for (u64 i = 2; i * i <= limit; ++i)
    if (is_p[i])
      for (u64 j = i * i; j <= limit; j += i) is_p[j] = 0;
  return is_p;
}

bool all_primes_avoid_3_mod_4(i64 v) {
  for (const auto& pp : factor(v).factors)
    if (pp.prime % 4 == 3) return false;
  return true;
}

i64 count_S_sieve(i64 limit) {
  // Every prime divisor of n^2+1 below `limit` is divided out; what is left
  // is 1 or a single prime exceeding limit, since n^2+1 <= limit^2+1.
  constexpr i64 kMaxLimit = 200'000'000;
  if (limit > kMaxLimit) throw RangeError("density(S) limit exceeds supported range");
  auto is_p = prime_table(static_cast<u64>(limit));
  struct Root {
    u64 p;
    u64 r;
  };
  std::vector<Root> roots;
  for (i64 p = 2; p <= limit; ++p) {
    if (!is_p[p]) continue;
    if (p % 4 == 1) {
      u64 r = sqrt_mod_prime(static_cast<u64>(p - 1), static_cast<u64>(p));
      roots.push_back({static_cast<u64>(p), r});
      roots.push_back({static_cast<u64>(p), static_cast<u64>(p) - r});
    }
  }
  constexpr i64 kBlock = 1 << 18;
  std::vector<u64> residual;
  std::vector<char> bad;
  i64 count = 0;
  for (i64 lo = 1; lo <= limit; lo += kBlock) {
    i64 hi = std::min(limit + 1, lo + kBlock);
    residual.assign(static_cast<size_t>(hi - lo), 0);
    bad.assign(static_cast<size_t>(hi - lo), 0);
    for (i64 n = lo; n < hi; ++n) {
      u64 v = static_cast<u64>(n) * static_cast<u64>(n) + 1;
      residual[n - lo] = v % 2 == 0 ? v / 2 : v;
    }
    for (const auto& [p, r] : roots) {
      u64 start = static_cast<u64>(lo) + (r + p - static_cast<u64>(lo) % p) % p;
      for (u64 n = start; n < static_cast<u64>(hi); n += p) {
        u64& v = residual[n - lo];
        while (v % p == 0) v /= p;
        if (p % 8 == 5) bad[n - lo] = 1;
      }
    }
    for (i64 n = lo; n < hi; ++n) {
      u64 v = residual[n - lo];
      if (!bad[n - lo] && !(v > 1 && v % 8 != 1)) ++count;
    }
  }
  return count;
}

i64 count_Sprime_sieve(i64 limit) {
  constexpr i64 kMaxLimit = 100'000'000;
  if (limit > kMaxLimit) throw RangeError("density(S') limit exceeds supported range");
  // bad3[v]: v has a prime divisor 3 mod 4
  std::vector<char> bad3(static_cast<size_t>(limit + 2), 0);
  auto is_p = prime_table(static_cast<u64>(limit + 1));
  for (i64 p = 3; p <= limit + 1; p += 4)
    if (is_p[p])
      for (i64 v = p; v <= limit + 1; v += p) bad3[v] = 1;
  i64 count = 0;
  for (i64 n = 2; n <= limit; ++n)
    if (!bad3[n - 1] || !bad3[n + 1]) ++count;
  return count;
}

} // namespace

i64 Factorization::product() const {
  i64 result = 1;
  for (const auto& pp : factors)
    for (int i = 0; i < pp.exponent; ++i) result = checked_mul(result, pp.prime);
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnessBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : kWitnessBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor(i64 n) {
  if (n < 1) throw DomainError("factor: n must be >= 1");
  Factorization result;
  result.value = n;
  u64 m = static_cast<u64>(n);
  std::map<u64, int> found;
  for (u64 p = 2; p < kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      m /= p;
      ++found[p];
    }
  }
  if (m > 1) factor_into(m, found);
  for (const auto& [p, e] : found) result.factors.push_back({static_cast<i64>(p), e});
  return result;
}

int jacobi(i64 a_in, i64 n_in) {
  if (n_in <= 0 || n_in % 2 == 0) throw DomainError("jacobi: n must be odd and positive");
  u64 n = static_cast<u64>(n_in);
  u64 a = static_cast<u64>(mod(a_in, n_in));
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      u64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int legendre(i64 a, i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p)))
    throw DomainError("legendre: p must be an odd prime");
  return jacobi(a, p);
}

SquareModResult is_square_mod(i64 a, i64 n) {
  if (n < 1) throw DomainError("is_square_mod: n must be >= 1");
  u64 r = static_cast<u64>(mod(a, n));
  u64 s = isqrt(r);
  if (s * s == r) return {true, static_cast<i64>(s)};
  // CRT accumulation: x = acc (mod acc_mod)
  u128 acc = 0, acc_mod = 1;
  for (const auto& pp : factor(n).factors) {
    u64 p = static_cast<u64>(pp.prime);
    u64 pk = 1;
    for (int i = 0; i < pp.exponent; ++i) pk *= p;
    auto root = root_prime_power(r, p, pp.exponent, pk);
    if (!root) return {false, std::nullopt};
    // acc + acc_mod * t = root (mod pk)
    u64 am = static_cast<u64>(acc_mod % pk);
    u64 diff = (*root + pk - static_cast<u64>(acc % pk)) % pk;
    u64 t = pk == 1 ? 0 : mulmod(diff, static_cast<u64>(invmod(static_cast<i64>(am), static_cast<i64>(pk))), pk);
    acc += acc_mod * t;
    acc_mod *= pk;
  }
  return {true, static_cast<i64>(acc % acc_mod)};
}

int chi8m(i64 a, i64 m, i64 search_cap) {
  if (m < 1 || m % 2 == 0) throw DomainError("chi8m: m must be odd and positive");
  i64 modulus = checked_mul(8, m);
  i64 r = mod(a, modulus);
  if (std::gcd(r, modulus) != 1) throw DomainError("chi8m: gcd(a, 8m) must be 1");
  for (i64 p = r; p < search_cap; p = checked_add(p, modulus))
    if (is_prime(static_cast<u64>(p))) return jacobi(checked_mul(2, m), p);
  throw ResourceError("chi8m: no prime in the residue class below the search cap");
}

bool in_S(i64 n) {
  if (n < 1) throw DomainError("in_S: n must be >= 1");
  i64 v = checked_add(checked_mul(n, n), 1);
  for (const auto& pp : factor(v).factors)
    if (pp.prime != 2 && pp.prime % 8 != 1) return false;
  return true;
}

bool in_Sprime(i64 n) {
  if (n < 2) throw DomainError("in_Sprime: n must be >= 2");
  return all_primes_avoid_3_mod_4(n - 1) || all_primes_avoid_3_mod_4(checked_add(n, 1));
}

ResiduePredicateSet ResiduePredicateSet::sk(int k) {
  if (k < 0) throw DomainError("Sk requires k >= 0");
  return {Kind::Sk, k};
}

ResiduePredicateSet ResiduePredicateSet::tk(int k) {
  if (k < 0) throw DomainError("Tk requires k >= 0");
  return {Kind::Tk, k};
}

ResiduePredicateSet ResiduePredicateSet::parse(const std::string& text) {
  if (text == "S") return s();
  if (text == "Sprime" || text == "S'") return sprime();
  if (text == "all") return all();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    int k = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
      throw ParseError("bad set parameter in '" + text + "'");
    if (head == "Sk") return sk(k);
    if (head == "Tk") return tk(k);
  }
  throw ParseError("unknown set '" + text + "' (expected S, Sprime, Sk:k, Tk:k or all)");
}

std::string ResiduePredicateSet::name() const {
  switch (kind) {
  case Kind::All: return "all";
  case Kind::S: return "S";
  case Kind::Sprime: return "Sprime";
  case Kind::Sk: return "Sk:" + std::to_string(k);
  case Kind::Tk: return "Tk:" + std::to_string(k);
  }
  return {};
}

bool ResiduePredicateSet::contains(i64 n) const {
  switch (kind) {
  case Kind::All: return true;
  case Kind::S: return in_S(n);
  case Kind::Sprime: return n >= 2 && in_Sprime(n);
  case Kind::Sk:
    for (i64 p : primes_in_progression(5, 8, k))
      if ((mulmod(static_cast<u64>(mod(n, p)), static_cast<u64>(mod(n, p)), static_cast<u64>(p)) + 1) % p == 0)
        return false;
    return true;
  case Kind::Tk:
    for (i64 p : primes_in_progression(3, 4, k))
      if (n % p == 0) return false;
    return true;
  }
  return false;
}

std::vector<i64> primes_in_progression(i64 residue, i64 modulus, int count) {
  std::vector<i64> out;
  for (i64 p = mod(residue, modulus); static_cast<int>(out.size()) < count; p = checked_add(p, modulus))
    if (is_prime(static_cast<u64>(p))) out.push_back(p);
  return out;
}

i64 count_members(const ResiduePredicateSet& set, i64 limit) {
  if (limit < 1) throw DomainError("density limit must be >= 1");
  using Kind = ResiduePredicateSet::Kind;
  switch (set.kind) {
  case Kind::All: return limit;
  case Kind::S: return count_S_sieve(limit);
  case Kind::Sprime: return count_Sprime_sieve(limit);
  case Kind::Sk: {
    auto primes = primes_in_progression(5, 8, set.k);
    i64 count = 0;
    for (i64 n = 1; n <= limit; ++n) {
      bool member = true;
      for (i64 p : primes) {
        i64 r = n % p;
        if ((r * r + 1) % p == 0) {
          member = false;
          break;
        }
      }
      count += member;
    }
    return count;
  }
  case Kind::Tk: {
    auto primes = primes_in_progression(3, 4, set.k);
    i64 count = 0;
    for (i64 n = 1; n <= limit; ++n)
      count += std::none_of(primes.begin(), primes.end(), [n](i64 p) { return n % p == 0; });
    return count;
  }
  }
  return 0;
}

Rational density(const ResiduePredicateSet& set, i64 limit) {
  return Rational(count_members(set, limit), limit);
}

Rational product_bound(ResiduePredicateSet::Kind kind, int k) {
  using Kind = ResiduePredicateSet::Kind;
  if (k < 0) throw DomainError("product_bound requires k >= 0");
  if (kind != Kind::Sk && kind != Kind::Tk) throw DomainError("product_bound is defined for Sk and Tk");
  Rational result(1);
  auto primes = kind == Kind::Sk ? primes_in_progression(5, 8, k) : primes_in_progression(3, 4, k);
  for (i64 p : primes) result *= Rational(p - (kind == Kind::Sk ? 2 : 1), p);
  return result;
}

} // namespace obstruct::nt
