#include "obstruct/gram.hpp"

#include <istream>
#include <sstream>

#include "obstruct/errors.hpp"

namespace obstruct {

namespace {

using WideMatrix = std::vector<std::vector<i128>>;

i128 wide_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("overflow in exact elimination");
  return r;
}

WideMatrix widen(const IntMatrix& m) {
  WideMatrix w(m.size());
  for (size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
  return w;
}

// Bareiss elimination in place.  With `pivoting` rows are swapped to find a
// nonzero pivot; returns the rank and flips `sign` once per swap.
int bareiss(WideMatrix& a, bool pivoting, int& sign, std::vector<i128>* pivots) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  i128 prev = 1;
  size_t r = 0;
  sign = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    if (a[r][c] == 0) {
      if (!pivoting) return static_cast<int>(r);
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        i128 v = wide_mul(a[r][c], a[i][j]) - wide_mul(a[i][c], a[r][j]);
        a[i][j] = v / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    if (pivots) pivots->push_back(prev);
    ++r;
  }
  return static_cast<int>(r);
}

} // namespace

GramMatrix::GramMatrix(IntMatrix rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_)
    if (row.size() != rows_.size()) throw DomainError("Gram matrix must be square");
}

bool GramMatrix::is_symmetric() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < i; ++j)
      if (rows_[i][j] != rows_[j][i]) return false;
  return true;
}

bool GramMatrix::is_negative_definite() const {
  if (!is_symmetric()) return false;
  auto minors = leading_minors(rows_);
  if (static_cast<int>(minors.size()) != rank()) return false;
  for (size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) d_{k+1} > 0
    bool odd = (k % 2 == 0);
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

GramMatrix GramMatrix::negated() const {
  IntMatrix m = rows_;
  for (auto& row : m)
    for (auto& v : row) v = checked_neg(v);
  return GramMatrix(std::move(m));
}

i64 determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
  WideMatrix a = widen(m);
  int sign = 1;
  int r = bareiss(a, true, sign, nullptr);
  if (r < static_cast<int>(m.size())) return 0;
  return narrow(sign * a.back().back());
}

std::vector<i64> leading_minors(const IntMatrix& m) {
  WideMatrix a = widen(m);
  int sign = 1;
  std::vector<i128> pivots;
  bareiss(a, false, sign, &pivots);
  std::vector<i64> out;
  for (i128 p : pivots) out.push_back(narrow(p));
  return out;
}

int matrix_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  WideMatrix a = widen(m);
  int sign = 1;
  return bareiss(a, true, sign, nullptr);
}

GramMatrix parse_gram(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty Gram file");
  std::istringstream head(lines[0]);
  long long n = -1;
  std::string extra;
  if (!(head >> n) || n < 1 || (head >> extra)) throw ParseError("first line must be the rank");
  if (static_cast<long long>(lines.size()) != n + 1)
    throw ParseError("expected " + std::to_string(n) + " matrix rows");
  IntMatrix rows;
  for (long long i = 1; i <= n; ++i) {
    std::istringstream ls(lines[i]);
    std::vector<i64> row;
    long long v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw ParseError("non-integer entry in row " + std::to_string(i));
    if (static_cast<long long>(row.size()) != n)
      throw ParseError("row " + std::to_string(i) + " has the wrong length");
    rows.push_back(std::move(row));
  }
  return GramMatrix(std::move(rows));
}

GramMatrix parse_gram(const std::string& text) {
  std::istringstream in(text);
  return parse_gram(in);
}

std::string format_gram(const GramMatrix& g) {
  std::ostringstream out;
  out << g.rank() << '\n';
  for (const auto& row : g.rows()) {
    for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

} // namespace obstruct
