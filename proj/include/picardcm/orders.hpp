#ifndef PICARDCM_ORDERS_HPP
#define PICARDCM_ORDERS_HPP

#include <array>

#include "picardcm/cubic_field.hpp"
#include "picardcm/lattice.hpp"

namespace picardcm {

/// A full-rank order lattice: rank 3 (suborder of K+) in the power basis
/// {1, alpha, alpha^2}, or rank 6 (suborder of K = K+(zeta3)) in the basis
/// (1, alpha, alpha^2, zeta3, alpha*zeta3, alpha^2*zeta3).
struct OrderBasis {
  int rank = 0;
  QLattice lattice;
  Integer disc = 0;
};

/// Multiplication of ambient coordinate vectors (dispatches on rank).
QVector order_mul(const CubicField& f, int rank, const QVector& a,
                  const QVector& b);
Rational order_trace(const CubicField& f, int rank, const QVector& a);

/// Products of all basis pairs stay in the lattice and 1 is a member.
bool is_ring_lattice(const CubicField& f, int rank, const QLattice& lat);

/// det of the trace-form Gram matrix of the basis.
Integer lattice_disc(const CubicField& f, int rank, const QLattice& lat);

/// Wrap a lattice as an order, verifying the ring property.
OrderBasis make_order(const CubicField& f, int rank, const QLattice& lat);

/// Dedekind p-maximality criterion for Z[alpha] (no factorization needed,
/// only gcds mod p).
bool dedekind_is_p_maximal(const CubicField& f, const Integer& p);

/// Round-2 p-saturation: smallest p-maximal order containing `o`.
OrderBasis p_saturate(const CubicField& f, const OrderBasis& o,
                      const Integer& p);

/// The maximal order of K+: round-2 at every prime p with p^2 | poly_disc,
/// using the Dedekind criterion as a shortcut certificate.
OrderBasis maximal_order(const CubicField& f);

/// The ring O+[zeta3] as a rank-6 lattice, 3-saturated (the only prime at
/// which it can be non-maximal when O+ is maximal, since disc Q(zeta3) = -3).
OrderBasis sextic_order_from_cubic(const CubicField& f, const OrderBasis& oplus);

/// Wrap a user-supplied rank-6 basis (rows in the flat sextic basis),
/// verifying the ring property; no saturation.
OrderBasis sextic_order_from_rows(const CubicField& f, const QMatrix& rows);

/// The ring Z + 2*O (index 2^(rank-1) in O).
OrderBasis z_plus_2O(const CubicField& f, const OrderBasis& o);

/// Intersection O intersect K+ as a rank-3 order.
OrderBasis real_suborder(const CubicField& f, const OrderBasis& o6);

/// Coordinates c of w in the basis {mu^i zeta3^j}, ordered
/// (mu^0, mu^1, mu^2, mu^0*zeta3, mu^1*zeta3, mu^2*zeta3).
/// Requires mu irrational (it then generates K+).
std::array<Rational, 6> express_in_power_basis(const CubicField& f,
                                               const SexticElement& w,
                                               const FieldElement& mu);

}  // namespace picardcm

#endif
