#include "picardcm/bound_engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <optional>

namespace picardcm {

MuData mu_data(const CubicField& f, const FieldElement& mu) {
  auto mp = f.minpoly(mu);
  if (mp.degree != 3)
    throw std::invalid_argument("mu generates a proper subfield");
  if (!is_integer(mp.t1) || !is_integer(mp.a1) || !is_integer(mp.n))
    throw std::invalid_argument("mu is not an algebraic integer");
  MuData md;
  md.mu = mu;
  md.t1 = mp.t1.get_num();
  md.a1 = mp.a1.get_num();
  md.N = mp.n.get_num();
  md.t2 = md.t1 * md.t1 - 2 * md.a1;
  if (md.t2 <= 0) throw std::invalid_argument("Tr(mu^2) must be positive");
  return md;
}

bool in_z_plus_2O(const CubicField& f, const OrderBasis& o6,
                  const FieldElement& mu) {
  OrderBasis lat = z_plus_2O(f, o6);
  QVector v = {mu[0], mu[1], mu[2], Rational(0), Rational(0), Rational(0)};
  return lat.lattice.contains(v);
}

CandidateTuple make_candidate(const MuData& md, const Integer& x,
                              const Integer& a, int m) {
  CandidateTuple t;
  t.x = x;
  t.a = a;
  t.m = m;
  t.f = md.t1 - x;
  t.e = -(md.a1 + x * x + a - md.t1 * x);
  t.b = md.N - (x * x * x - md.t1 * x * x + 2 * x * a + md.a1 * x - md.t1 * a);
  t.alpha = m * a;
  t.beta = m * t.b;
  t.gamma = t.alpha * t.e + t.beta * t.f;
  t.n = t.alpha * t.gamma - t.beta * t.beta;
  return t;
}

IntegralityContext::IntegralityContext(const CubicField& f,
                                       const OrderBasis& o6, const MuData& md)
    : md_(md) {
  OrderBasis lat = z_plus_2O(f, o6);
  for (int i = 0; i < 6; ++i) {
    const QVector& r = lat.lattice.row(i);
    SexticElement w{{r[0], r[1], r[2]}, {r[3], r[4], r[5]}};
    coords_.push_back(express_in_power_basis(f, w, md.mu));
  }
}

bool IntegralityContext::admits(const CandidateTuple& t) const {
  if (t.gamma <= 0 || t.n <= 0) return false;
  // Integer powers of iota(mu) = [[x,a,b],[1,0,e],[0,1,f]].
  std::array<std::array<Integer, 9>, 3> mp;
  mp[0] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  mp[1] = {t.x, t.a, t.b, 1, 0, t.e, 0, 1, t.f};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Integer s = 0;
      for (int k = 0; k < 3; ++k) s += mp[1][r * 3 + k] * mp[1][k * 3 + c];
      mp[2][r * 3 + c] = s;
    }
  for (const auto& w : coords_) {
    // Rational and zeta3 parts of iota(w) separately.
    for (int part = 0; part < 2; ++part) {
      for (int idx = 0; idx < 9; ++idx) {
        Rational q(0);
        for (int i = 0; i < 3; ++i) {
          const Rational& c = w[3 * part + i];
          if (c != 0) q += c * Rational(mp[i][idx]);
        }
        if (idx < 3) {
          if (!is_integer(q)) return false;
        } else if (!is_integer(q * Rational(t.n))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// One surviving tuple per (x, a): the largest m whose filter passes.
std::optional<CandidateTuple> evaluate_pair(const IntegralityContext& ctx,
                                            const Integer& x,
                                            const Integer& a) {
  for (int m : {2, 1}) {
    CandidateTuple t = make_candidate(ctx.data(), x, a, m);
    if (ctx.admits(t)) return t;
  }
  return std::nullopt;
}

BoundCertificate finish(const MuData& md, std::vector<CandidateTuple> tuples) {
  BoundCertificate cert;
  cert.mu = md;
  // Factor each n separately; the full product can run to thousands of
  // digits while the individual n stay below t2^3.
  cert.n_mu = FactoredNumber::one();
  for (const auto& t : tuples) cert.n_mu *= FactoredNumber::factorize(t.n);
  cert.tuples = std::move(tuples);
  cert.six_n_mu = FactoredNumber::factorize(6) * cert.n_mu;
  cert.primes = cert.six_n_mu.prime_set();
  return cert;
}

std::vector<std::pair<Integer, Integer>> pair_grid(const MuData& md) {
  std::vector<std::pair<Integer, Integer>> grid;
  Integer sq = isqrt(md.t2);
  for (Integer x = -sq; x <= sq; ++x) {
    Integer amax = floor_div(md.t2 - x * x, 2);
    for (Integer a = 1; a <= amax; ++a) grid.emplace_back(x, a);
  }
  return grid;
}

void check_mu(const CubicField& f, const OrderBasis& o6,
              const FieldElement& mu) {
  if (o6.rank != 6)
    throw std::invalid_argument("compute_N_mu: need a rank-6 order");
  if (!in_z_plus_2O(f, o6, mu))
    throw std::invalid_argument("mu is not in Z + 2O");
}

}  // namespace

BoundCertificate compute_N_mu_serial(const CubicField& f, const OrderBasis& o6,
                                     const FieldElement& mu) {
  check_mu(f, o6, mu);
  MuData md = mu_data(f, mu);
  IntegralityContext ctx(f, o6, md);
  std::vector<CandidateTuple> tuples;
  for (const auto& [x, a] : pair_grid(md))
    if (auto t = evaluate_pair(ctx, x, a)) tuples.push_back(*t);
  return finish(md, std::move(tuples));
}

BoundCertificate compute_N_mu_parallel(const CubicField& f,
                                       const OrderBasis& o6,
                                       const FieldElement& mu, int threads) {
  check_mu(f, o6, mu);
  MuData md = mu_data(f, mu);
  IntegralityContext ctx(f, o6, md);
  auto grid = pair_grid(md);
  const long total = static_cast<long>(grid.size());
  std::vector<std::optional<CandidateTuple>> results(total);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < total; ++i)
    results[i] = evaluate_pair(ctx, grid[i].first, grid[i].second);
#else
  (void)threads;
  for (long i = 0; i < total; ++i)
    results[i] = evaluate_pair(ctx, grid[i].first, grid[i].second);
#endif
  // Deterministic merge in grid order.
  std::vector<CandidateTuple> tuples;
  for (auto& r : results)
    if (r) tuples.push_back(std::move(*r));
  return finish(md, std::move(tuples));
}

BoundCertificate compute_N_mu(const CubicField& f, const OrderBasis& o6,
                              const FieldElement& mu, int threads) {
  if (threads <= 1) return compute_N_mu_serial(f, o6, mu);
  return compute_N_mu_parallel(f, o6, mu, threads);
}

}  // namespace picardcm
