#ifndef PICARDCM_LATTICE_SEARCH_HPP
#define PICARDCM_LATTICE_SEARCH_HPP

#include <optional>
#include <vector>

#include "picardcm/orders.hpp"

namespace picardcm {

/// Symmetric positive definite Gram matrix with exact rational entries.
using GramMatrix = QMatrix;

/// G_ij = Tr(b_i * b_j) for a rank-3 totally real lattice basis.
GramMatrix gram_of(const CubicField& f, const QLattice& basis);

/// Throws if G is not positive definite (leading principal minors).
void check_positive_definite(const GramMatrix& g);

/// All integer vectors v != 0 with v^T G v <= bound, one representative per
/// +-pair (first nonzero coordinate positive). Fincke-Pohst with exact
/// rational Cholesky.
std::vector<std::vector<Integer>> enumerate_short_vectors(const GramMatrix& g,
                                                          const Rational& bound);

struct MuCandidate {
  FieldElement mu;
  Integer t1, a1, n;  // minimal polynomial x^3 - t1 x^2 + a1 x - n
  Integer t2;         // t1^2 - 2 a1 = Tr(mu^2)
};

/// All mu in Z+2O+ with Tr(mu^2) <= cap (default: the Minkowski cap
/// floor(1 + (16/pi)|disc O+|^(1/2))), mu irrational, sorted by
/// (t2, coordinates); one representative per +-pair.
std::vector<MuCandidate> find_mu(const CubicField& f, const OrderBasis& oplus,
                                 std::optional<Integer> t2_cap = std::nullopt);

/// B = min Tr_{K+/Q}(x * conj(x)) over nonzero x in O with conj(x) = -x.
Integer compute_B(const CubicField& f, const OrderBasis& o6);

struct MinkowskiBounds {
  Integer t2_bound;       // floor(1 + (16/pi) sqrt(|disc|))
  Integer p_bound;        // t2_bound^3
  Integer crude_ceiling;  // ceil(196 |disc|^(3/2))
};
MinkowskiBounds minkowski_bounds(const Integer& disc_oplus);

}  // namespace picardcm

#endif
