#include "obstruct/repvar.hpp"

#include <numeric>

#include "obstruct/errors.hpp"

namespace obstruct::repvar {

SingularOrders x1_singular_orders(i64 l, i64 m, i64 p) {
  const i64 a = checked_mul(checked_sub(1, checked_mul(l, m)), checked_sub(checked_mul(2, p), 1));
  return {checked_abs(l), checked_abs(checked_add(a, checked_mul(p, l)))};
}

bool IrrepWitness::in_middle_third() const {
  return Rational(1, 3) <= phi_over_pi && phi_over_pi <= Rational(2, 3);
}

bool IrrepWitness::extends() const {
  const Rational edge(1, checked_mul(2, k));
  return edge < phi_over_pi && phi_over_pi < Rational(1) - edge;
}

std::optional<IrrepWitness> irrep_witness(i64 l, i64 m, i64 p) {
  if (m == 0 || m == 1) throw DomainError("irrep_witness requires m not in {0, 1}");
  const i64 det = checked_sub(checked_mul(2, p), 1);
  if (l % det == 0) return std::nullopt;

  IrrepWitness w;
  w.orders = x1_singular_orders(l, m, p);
  w.k = checked_abs(checked_sub(checked_mul(2, m), 1));
  w.g = std::gcd(checked_abs(l), checked_abs(det));
  w.D = checked_abs(det) / w.g;
  w.A = checked_abs(l) / w.g;
  // q = ((D+1)/2) A^{-1} mod D, lifted into [1, 2D] with the parity of alpha2
  i64 q = static_cast<i64>(mulmod(static_cast<u64>((w.D + 1) / 2),
                                  static_cast<u64>(invmod(w.A, w.D)), static_cast<u64>(w.D)));
  if (q == 0) q = w.D;
  if ((q - w.orders.alpha2) % 2 != 0) q += w.D;
  w.q = q;
  w.phi_over_pi = Rational(checked_mul(w.A, q), w.D).mod_one();
  return w;
}

bool small_sfs_su2_abelian(const std::array<i64, 3>& orders, bool h1_even_or_infinite) {
  if (orders[0] < 1 || orders[0] > orders[1] || orders[1] > orders[2])
    throw DomainError("orders must be positive and sorted");
  if (orders == std::array<i64, 3>{2, 4, 4}) return true;
  return orders == std::array<i64, 3>{3, 3, 3} && h1_even_or_infinite;
}

} // namespace obstruct::repvar
