#pragma once

// Slow, obviously-correct reference implementations used as test oracles.
// None of these call into the library.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline std::map<i64, int> trial_factor(i64 n) {
  std::map<i64, int> f;
  for (i64 p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

inline bool trial_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline i64 pos_mod(i64 a, i64 m) { return ((a % m) + m) % m; }

// Euler's criterion by repeated multiplication.
inline int euler_legendre(i64 a, i64 p) {
  i64 r = pos_mod(a, p);
  if (r == 0) return 0;
  i64 acc = 1;
  for (i64 i = 0; i < (p - 1) / 2; ++i) acc = acc * r % p;
  return acc == 1 ? 1 : -1;
}

// squares[a] is true when a is a square modulo n.
inline std::vector<bool> square_table(i64 n) {
  std::vector<bool> sq(n, false);
  for (i64 x = 0; x < n; ++x) sq[x * x % n] = true;
  return sq;
}

// Every odd prime divisor of n^2+1 is 1 mod 8.
inline bool in_S(i64 n) {
  for (auto [p, e] : trial_factor(n * n + 1))
    if (p != 2 && p % 8 != 1) return false;
  return true;
}

inline bool no_prime_3_mod_4(i64 v) {
  for (auto [p, e] : trial_factor(v))
    if (p % 4 == 3) return false;
  return true;
}

inline bool in_Sprime(i64 n) { return no_prime_3_mod_4(n - 1) || no_prime_3_mod_4(n + 1); }

// Changemakers by scanning every nondecreasing tuple with entries <= sqrt(norm).
inline std::vector<std::vector<i64>> brute_changemakers(int length, i64 norm) {
  std::vector<std::vector<i64>> out;
  i64 top = 0;
  while ((top + 1) * (top + 1) <= norm) ++top;
  std::vector<i64> t(length, 0);
  while (true) {
    bool nondecreasing = true;
    for (int i = 1; i < length; ++i) nondecreasing = nondecreasing && t[i - 1] <= t[i];
    if (nondecreasing) {
      i64 sq = 0, prefix = 0;
      bool ok = true;
      for (int i = 0; i < length; ++i) {
        if (t[i] > prefix + 1) ok = false;
        prefix += t[i];
        sq += t[i] * t[i];
      }
      if (ok && sq == norm) out.push_back(t);
    }
    int i = length - 1;
    while (i >= 0 && t[i] == top) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out; // odometer order is lexicographic
}

// Cofactor expansion along the first row.
inline i64 laplace_det(const std::vector<std::vector<i64>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i64 total = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<i64>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<i64> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    i64 term = m[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Spanning trees of a multigraph by checking every (V-1)-subset of edges.
inline i64 spanning_trees(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int e = static_cast<int>(edges.size());
  const int need = vertices - 1;
  i64 count = 0;
  std::vector<int> pick(need);
  auto check = [&]() {
    std::vector<int> parent(vertices);
    for (int i = 0; i < vertices; ++i) parent[i] = i;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (int idx : pick) {
      int a = find(edges[idx].first), b = find(edges[idx].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  // iterate combinations
  for (int i = 0; i < need; ++i) pick[i] = i;
  if (need > e) return 0;
  while (true) {
    if (check()) ++count;
    int i = need - 1;
    while (i >= 0 && pick[i] == e - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

inline i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Rank of a small integer matrix by row reduction with gcd normalisation.
inline int small_rank(std::vector<std::vector<i64>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      i64 f = m[r][c], g = m[rank][c];
      i64 h = 0;
      for (int k = 0; k < cols; ++k) {
        m[r][k] = m[r][k] * g - m[rank][k] * f;
        h = gcd(h, m[r][k]);
      }
      if (h > 1)
        for (int k = 0; k < cols; ++k) m[r][k] /= h;
    }
    ++rank;
  }
  return rank;
}

// All integer vectors of the given length and sum of squares.
inline void vectors_of_norm(int length, i64 norm, std::vector<i64>& cur, std::vector<std::vector<i64>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    if (norm == 0) out.push_back(cur);
    return;
  }
  for (i64 x = -norm; x <= norm; ++x) {
    if (x * x > norm) continue;
    cur.push_back(x);
    vectors_of_norm(length, norm - x * x, cur, out);
    cur.pop_back();
  }
}

// Does G embed in sigma-perp inside -Z^{n+1}?  Plain backtracking over
// every candidate image, no symmetry reduction.
inline bool brute_embeds(const std::vector<std::vector<i64>>& g, const std::vector<i64>& sigma) {
  const int n = static_cast<int>(g.size());
  const int len = static_cast<int>(sigma.size());
  auto dot = [&](const std::vector<i64>& x, const std::vector<i64>& y) {
    i64 s = 0;
    for (int i = 0; i < len; ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<std::vector<std::vector<i64>>> cand(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<i64>> all;
    std::vector<i64> cur;
    vectors_of_norm(len, -g[i][i], cur, all);
    for (auto& v : all)
      if (dot(v, sigma) == 0) cand[i].push_back(v);
  }
  std::vector<std::vector<i64>> chosen;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) {
      auto m = chosen;
      m.push_back(sigma);
      return small_rank(m) == n + 1;
    }
    for (const auto& v : cand[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = -dot(v, chosen[j]) == g[i][j];
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

} // namespace oracle
