#include "obstruct/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "obstruct/errors.hpp"

namespace obstruct::lattice {

namespace {

i64 isqrt(i64 n) {
  if (n <= 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Largest norm reachable with `slots` more entries after a prefix summing to s.
i64 max_tail_norm(int slots, i64 s) {
  i128 total = 0, sum = s;
  for (int i = 0; i < slots; ++i) {
    i128 next = sum + 1;
    total += next * next;
    sum += next;
    if (total > (i128{1} << 62)) return std::numeric_limits<i64>::max();
  }
  return static_cast<i64>(total);
}

void enumerate_rec(int length, Vector& cur, i64 sum, i64 remaining, std::vector<Vector>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == length) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int slots = length - i;
  const i64 lo = cur.empty() ? 0 : cur.back();
  const i64 hi = std::min(sum + 1, isqrt(remaining));
  for (i64 v = lo; v <= hi; ++v) {
    // every later entry is at least v
    if (static_cast<i128>(v) * v * slots > remaining) break;
    i64 rest = remaining - v * v;
    if (rest > max_tail_norm(slots - 1, sum + v)) continue;
    cur.push_back(v);
    enumerate_rec(length, cur, sum + v, rest, out);
    cur.pop_back();
  }
}

i64 dot(const Vector& a, const Vector& b) {
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

// Backtracking over the images of the basis vectors, one coordinate at a time.
// Each image must have the prescribed norm and prescribed inner products with
// sigma and with every image already placed.
class EmbeddingSearch {
public:
  EmbeddingSearch(const GramMatrix& g, const Vector& sigma, const SearchOptions& options)
      : n_(g.rank()), dim_(n_ + 1), gp_(g.negated()), sigma_(sigma), prune_(options.symmetry_pruning) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return gp_(a, a) < gp_(b, b); });
    same_as_prev_.assign(dim_, 0);
    zero_.assign(dim_, 0);
    for (int j = 0; j < dim_; ++j) {
      same_as_prev_[j] = j > 0 && sigma_[j] == sigma_[j - 1];
      zero_[j] = sigma_[j] == 0;
    }
    tied_.assign(dim_, 1);
    seen_.assign(dim_, 0);
    tails_.push_back(tail_norms(sigma_));
    xs_.assign(n_, Vector(dim_, 0));
  }

  std::optional<Embedding> run() {
    if (!place(0)) return std::nullopt;
    Embedding e;
    e.sigma = sigma_;
    e.vectors.resize(n_);
    for (int k = 0; k < n_; ++k) e.vectors[order_[k]] = placed_[k];
    return e;
  }

private:
  std::vector<i64> tail_norms(const Vector& v) const {
    std::vector<i64> t(dim_ + 1, 0);
    for (int j = dim_ - 1; j >= 0; --j) t[j] = t[j + 1] + v[j] * v[j];
    return t;
  }

  bool place(int k) {
    if (k == n_) {
      IntMatrix m(placed_.begin(), placed_.end());
      m.push_back(sigma_);
      return matrix_rank(m) == dim_;
    }
    const int r = order_[k];
    std::vector<i64> targets(k + 1, 0);
    for (int t = 0; t < k; ++t) targets[t + 1] = gp_(r, order_[t]);
    std::vector<i64> partial(k + 1, 0);
    return coordinate(k, 0, gp_(r, r), partial, targets);
  }

  const Vector& constraint(int c) const { return c == 0 ? sigma_ : placed_[c - 1]; }

  bool coordinate(int k, int j, i64 remaining, std::vector<i64>& partial, const std::vector<i64>& targets) {
    if (j == dim_) {
      if (remaining != 0) return false;
      for (size_t c = 0; c < partial.size(); ++c)
        if (partial[c] != targets[c]) return false;
      return commit(k);
    }
    Vector& x = xs_[k];
    const i64 bound = isqrt(remaining);
    for (i64 v = bound; v >= -bound; --v) {
      if (prune_) {
        if (same_as_prev_[j] && tied_[j] && v > x[j - 1]) continue;
        if (zero_[j] && !seen_[j] && v < 0) continue;
      }
      const i64 rest = remaining - v * v;
      bool ok = true;
      for (size_t c = 0; c < partial.size() && ok; ++c) {
        i64 p = partial[c] + v * constraint(static_cast<int>(c))[j];
        i128 gap = targets[c] - p;
        ok = gap * gap <= static_cast<i128>(rest) * tails_[c][j + 1];
      }
      if (!ok) continue;
      for (size_t c = 0; c < partial.size(); ++c) partial[c] += v * constraint(static_cast<int>(c))[j];
      x[j] = v;
      bool found = coordinate(k, j + 1, rest, partial, targets);
      for (size_t c = 0; c < partial.size(); ++c) partial[c] -= v * constraint(static_cast<int>(c))[j];
      if (found) return true;
    }
    return false;
  }

  bool commit(int k) {
    const Vector& x = xs_[k];
    auto tied = tied_;
    auto seen = seen_;
    for (int j = 0; j < dim_; ++j) {
      if (same_as_prev_[j]) tied_[j] = tied_[j] && x[j] == x[j - 1];
      if (x[j] != 0) seen_[j] = 1;
    }
    placed_.push_back(x);
    tails_.push_back(tail_norms(x));
    bool found = place(k + 1);
    if (found) return true;
    placed_.pop_back();
    tails_.pop_back();
    tied_ = std::move(tied);
    seen_ = std::move(seen);
    return false;
  }

  int n_, dim_;
  GramMatrix gp_;
  Vector sigma_;
  bool prune_;
  std::vector<int> order_;
  std::vector<char> same_as_prev_, zero_, tied_, seen_;
  std::vector<Vector> placed_;
  std::vector<std::vector<i64>> tails_; // tails_[0] for sigma, tails_[t+1] for placed_[t]
  std::vector<Vector> xs_; // partial image at each depth
};

void check_form(const GramMatrix& g) {
  if (g.rank() < 1) throw DomainError("empty Gram matrix");
  if (!g.is_negative_definite()) throw DomainError("Gram matrix is not negative definite");
}

} // namespace

bool is_changemaker(const Vector& entries) {
  i64 sum = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    i64 v = entries[i];
    if (v < 0) return false;
    if (i > 0 && v < entries[i - 1]) return false;
    if (v > sum + 1) return false;
    sum += v;
  }
  return true;
}

std::vector<Vector> enumerate_changemakers(int length, i64 norm) {
  if (length < 1) throw DomainError("changemaker length must be >= 1");
  if (norm < 1) throw DomainError("changemaker norm must be >= 1");
  std::vector<Vector> out;
  Vector cur;
  enumerate_rec(length, cur, 0, norm, out);
  return out;
}

i64 genus_from_changemaker(const Vector& sigma) {
  if (!is_changemaker(sigma)) throw DomainError("not a changemaker");
  i64 sq = 0, l1 = 0;
  for (i64 v : sigma) {
    sq = checked_add(sq, checked_mul(v, v));
    l1 = checked_add(l1, v);
  }
  return (sq - l1) / 2;
}

bool verify_embedding(const GramMatrix& g, const Embedding& e) {
  const int n = g.rank();
  if (static_cast<int>(e.vectors.size()) != n || static_cast<int>(e.sigma.size()) != n + 1) return false;
  for (const auto& v : e.vectors) {
    if (v.size() != e.sigma.size()) return false;
    if (dot(v, e.sigma) != 0) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (-dot(e.vectors[i], e.vectors[j]) != g(i, j)) return false;
  IntMatrix m(e.vectors.begin(), e.vectors.end());
  m.push_back(e.sigma);
  return matrix_rank(m) == n + 1;
}

std::optional<Embedding> embed_in_complement(const GramMatrix& g, const Vector& sigma, const SearchOptions& options) {
  check_form(g);
  if (static_cast<int>(sigma.size()) != g.rank() + 1)
    throw DomainError("changemaker length must be rank + 1");
  if (!is_changemaker(sigma)) throw DomainError("sigma is not a changemaker");
  return EmbeddingSearch(g, sigma, options).run();
}

ObstructionResult changemaker_obstruction(const GramMatrix& g, i64 p, bool all, const SearchOptions& options) {
  check_form(g);
  ObstructionResult result;
  for (const auto& sigma : enumerate_changemakers(g.rank() + 1, p)) {
    ++result.changemakers_tested;
    if (auto e = EmbeddingSearch(g, sigma, options).run()) {
      result.obstructed = false;
      result.witnesses.push_back(std::move(*e));
      if (!all) break;
    }
  }
  return result;
}

} // namespace obstruct::lattice
