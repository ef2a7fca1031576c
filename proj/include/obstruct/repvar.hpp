#pragma once

#include <array>
#include <optional>

#include "obstruct/rational.hpp"

/// Exact witnesses for irreducible SU(2) representations on the n = 0
/// Eudave-Munoz surgeries.
namespace obstruct::repvar {

struct SingularOrders {
  i64 alpha1 = 0;
  i64 alpha2 = 0;
};

/// |-l| and |(1 - lm)(2p - 1) + pl|.
SingularOrders x1_singular_orders(i64 l, i64 m, i64 p);

struct IrrepWitness {
  i64 g = 0; // gcd(l, 2p - 1)
  i64 D = 0; // |2p - 1| / g
  i64 A = 0; // |l| / g
  i64 q = 0;
  Rational phi_over_pi;
  SingularOrders orders;
  i64 k = 0; // |2m - 1|

  /// 1/3 <= phi/pi <= 2/3
  bool in_middle_third() const;
  /// 1/(2k) < phi/pi < 1 - 1/(2k)
  bool extends() const;
};

/// nullopt means SU(2)-cyclic, i.e. (2p - 1) divides l.  Requires m not in {0, 1}.
std::optional<IrrepWitness> irrep_witness(i64 l, i64 m, i64 p);

/// Small Seifert fibered spaces over S^2 with these orders whose SU(2)
/// representations are all abelian: (2,4,4), or (3,3,3) with |H1| even or
/// infinite.  Orders must be sorted and positive.
bool small_sfs_su2_abelian(const std::array<i64, 3>& orders, bool h1_even_or_infinite);

} // namespace obstruct::repvar
