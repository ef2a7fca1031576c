#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "obstruct/checked.hpp"

namespace obstruct {

using IntMatrix = std::vector<std::vector<i64>>;

/// Symmetric integer matrix, usually a negative-definite intersection form.
class GramMatrix {
public:
  GramMatrix() = default;
  explicit GramMatrix(IntMatrix rows);

  int rank() const { return static_cast<int>(rows_.size()); }
  i64 operator()(int i, int j) const { return rows_[i][j]; }
  const IntMatrix& rows() const { return rows_; }

  bool is_symmetric() const;
  bool is_negative_definite() const;
  GramMatrix negated() const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

private:
  IntMatrix rows_;
};

/// Exact determinant of a square matrix by fraction-free elimination.
i64 determinant(const IntMatrix& m);

/// Leading principal minors d_1..d_k, stopping early at the first zero.
std::vector<i64> leading_minors(const IntMatrix& m);

/// Rank over Q of an arbitrary integer matrix.
int matrix_rank(const IntMatrix& m);

/// Gram text format: rank line, then one row per line; '#' lines are comments.
GramMatrix parse_gram(std::istream& in);
GramMatrix parse_gram(const std::string& text);
std::string format_gram(const GramMatrix& g);

} // namespace obstruct
