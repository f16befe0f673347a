#ifndef PICARDCM_BOUND_ENGINE_HPP
#define PICARDCM_BOUND_ENGINE_HPP

#include <vector>

#include "picardcm/factored.hpp"
#include "picardcm/orders.hpp"

namespace picardcm {

/// Integer minimal-polynomial data of a totally real generator mu:
/// x^3 - t1 x^2 + a1 x - N, and t2 = Tr(mu^2) = t1^2 - 2 a1.
struct MuData {
  FieldElement mu;
  Integer t1, a1, N, t2;
};

/// Validates that mu is irrational with integer minimal polynomial and
/// positive t2.
MuData mu_data(const CubicField& f, const FieldElement& mu);

/// Membership test mu in Z + 2O for the rank-6 order O.
bool in_z_plus_2O(const CubicField& f, const OrderBasis& o6,
                  const FieldElement& mu);

/// One enumeration point (x, a, m) together with the derived quantities.
struct CandidateTuple {
  Integer x, a;
  int m = 1;
  Integer e, f, b;            // iota(mu) = [[x,a,b],[1,0,e],[0,1,f]]
  Integer alpha, beta, gamma; // alpha = m a, beta = m b, gamma = alpha e + beta f
  Integer n;                  // alpha gamma - beta^2
};

/// Derive the tuple at (x, a, m); no filtering applied.
CandidateTuple make_candidate(const MuData& md, const Integer& x,
                              const Integer& a, int m);

/// Precomputed data for the integrality filter: every basis element w of
/// Z + 2O written as sum c_i mu^i + (sum c_{3+i} mu^i) zeta3.
class IntegralityContext {
 public:
  IntegralityContext(const CubicField& f, const OrderBasis& o6,
                     const MuData& md);

  /// gamma > 0, n > 0 and every iota(w) has entries in (1/n)Z[zeta3] with
  /// integral top row.
  bool admits(const CandidateTuple& t) const;

  const MuData& data() const { return md_; }

 private:
  MuData md_;
  std::vector<std::array<Rational, 6>> coords_;  // one per basis element
};

/// The full certificate: surviving tuples (one per (x, a) pair, at the
/// largest surviving m) and the resulting products.
struct BoundCertificate {
  MuData mu;
  std::vector<CandidateTuple> tuples;
  FactoredNumber n_mu;          // product of surviving n
  FactoredNumber six_n_mu;      // 6 * n_mu
  std::vector<Integer> primes;  // primes of six_n_mu, ascending
};

/// Serial reference implementation.
BoundCertificate compute_N_mu_serial(const CubicField& f, const OrderBasis& o6,
                                     const FieldElement& mu);

/// OpenMP parallel version; identical output to the serial one.
BoundCertificate compute_N_mu_parallel(const CubicField& f,
                                       const OrderBasis& o6,
                                       const FieldElement& mu, int threads);

/// Dispatch: threads <= 1 runs the serial reference.
BoundCertificate compute_N_mu(const CubicField& f, const OrderBasis& o6,
                              const FieldElement& mu, int threads = 0);

}  // namespace picardcm

#endif
