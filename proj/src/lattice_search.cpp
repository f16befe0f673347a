#include "picardcm/lattice_search.hpp"

#include <algorithm>
#include <cmath>

namespace picardcm {

GramMatrix gram_of(const CubicField& f, const QLattice& basis) {
  const int n = basis.rank();
  GramMatrix g(n, QVector(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      g[i][j] = order_trace(f, basis.dim(),
                            order_mul(f, basis.dim(), basis.row(i), basis.row(j)));
      g[j][i] = g[i][j];
    }
  check_positive_definite(g);
  return g;
}

void check_positive_definite(const GramMatrix& g) {
  const int n = static_cast<int>(g.size());
  QMatrix a = g;
  for (int i = 0; i < n; ++i) {
    if (a[i][i] <= 0)
      throw std::domain_error("Gram matrix is not positive definite");
    for (int k = i + 1; k < n; ++k)
      for (int l = i + 1; l < n; ++l)
        a[k][l] -= a[i][k] * a[i][l] / a[i][i];
  }
}

namespace {

// Integer endpoints of {x : d*(x + c)^2 <= t} = [-c - sqrt(t/d), -c + sqrt(t/d)],
// rounded inward. The fixup predicates are monotone half-line conditions (true
// on one side of -c), so the exact correction loops always terminate even when
// the interval contains no integer; in that case upper < lower and the caller's
// range loop is empty.
Integer upper_root(const Rational& c, const Rational& d, const Rational& t) {
  double approx = -c.get_d() + std::sqrt(std::max(0.0, t.get_d() / d.get_d()));
  Integer x(static_cast<long>(std::floor(approx)));
  auto ok = [&](const Integer& v) {
    Rational s = Rational(v) + c;
    return s <= 0 || d * s * s <= t;
  };
  while (ok(x + 1)) ++x;
  while (!ok(x)) --x;
  return x;
}

Integer lower_root(const Rational& c, const Rational& d, const Rational& t) {
  double approx = -c.get_d() - std::sqrt(std::max(0.0, t.get_d() / d.get_d()));
  Integer x(static_cast<long>(std::ceil(approx)));
  auto ok = [&](const Integer& v) {
    Rational s = Rational(v) + c;
    return s >= 0 || d * s * s <= t;
  };
  while (ok(x - 1)) --x;
  while (!ok(x)) ++x;
  return x;
}

}  // namespace

std::vector<std::vector<Integer>> enumerate_short_vectors(
    const GramMatrix& g, const Rational& bound) {
  const int n = static_cast<int>(g.size());
  if (bound < 0) return {};
  // LDL^T: Q(x) = sum_i d[i] * (x_i + sum_{j>i} u[i][j] x_j)^2.
  QMatrix a = g;
  QVector d(n);
  QMatrix u(n, QVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    d[i] = a[i][i];
    if (d[i] <= 0)
      throw std::domain_error("Gram matrix is not positive definite");
    for (int j = i + 1; j < n; ++j) u[i][j] = a[i][j] / d[i];
    for (int k = i + 1; k < n; ++k)
      for (int l = i + 1; l < n; ++l)
        a[k][l] -= a[i][k] * a[i][l] / d[i];
  }
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> x(n, Integer(0));
  // Depth-first from the last coordinate down.
  auto rec = [&](auto&& self, int i, const Rational& remaining) -> void {
    if (i < 0) {
      bool nonzero = false, lead_positive = false;
      for (int k = 0; k < n; ++k)
        if (x[k] != 0) {
          nonzero = true;
          lead_positive = x[k] > 0;
          break;
        }
      if (nonzero && lead_positive) out.push_back(x);
      return;
    }
    Rational c(0);
    for (int j = i + 1; j < n; ++j)
      if (x[j] != 0) c += u[i][j] * Rational(x[j]);
    Integer lo = lower_root(c, d[i], remaining);
    Integer hi = upper_root(c, d[i], remaining);
    for (Integer v = lo; v <= hi; ++v) {
      x[i] = v;
      Rational s = Rational(v) + c;
      self(self, i - 1, remaining - d[i] * s * s);
    }
    x[i] = 0;
  };
  rec(rec, n - 1, bound);
  return out;
}

std::vector<MuCandidate> find_mu(const CubicField& f, const OrderBasis& oplus,
                                 std::optional<Integer> t2_cap) {
  if (oplus.rank != 3) throw std::invalid_argument("find_mu: need rank-3 order");
  OrderBasis lat = z_plus_2O(f, oplus);
  Integer cap = t2_cap ? *t2_cap : certified_minkowski_cap(abs(oplus.disc));
  GramMatrix g = gram_of(f, lat.lattice);
  auto vecs = enumerate_short_vectors(g, Rational(cap));
  std::vector<MuCandidate> out;
  for (const auto& v : vecs) {
    FieldElement mu = CubicField::zero();
    for (int i = 0; i < 3; ++i) {
      if (v[i] == 0) continue;
      for (int j = 0; j < 3; ++j)
        mu[j] += Rational(v[i]) * lat.lattice.row(i)[j];
    }
    if (CubicField::is_rational(mu)) continue;
    // +- representative: lexicographically greater coordinate triple.
    FieldElement neg = f.neg(mu);
    if (std::lexicographical_compare(mu.begin(), mu.end(), neg.begin(),
                                     neg.end()))
      mu = neg;
    auto mp = f.minpoly(mu);
    MuCandidate c;
    c.mu = mu;
    c.t1 = mp.t1.get_num();
    c.a1 = mp.a1.get_num();
    c.n = mp.n.get_num();
    Rational t2 = mp.t1 * mp.t1 - 2 * mp.a1;
    c.t2 = t2.get_num();
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const MuCandidate& a,
                                       const MuCandidate& b) {
    if (a.t2 != b.t2) return a.t2 < b.t2;
    return std::lexicographical_compare(a.mu.begin(), a.mu.end(),
                                        b.mu.begin(), b.mu.end());
  });
  return out;
}

Integer compute_B(const CubicField& f, const OrderBasis& o6) {
  if (o6.rank != 6) throw std::invalid_argument("compute_B: need rank-6 order");
  // Purely imaginary sublattice {x in O : conj(x) = -x}: in flat coords
  // (u, v) the condition is 2u = v, i.e. x + conj(x) = (2u - v, 0) = 0.
  QMatrix cond;
  for (int i = 0; i < 6; ++i) {
    const QVector& r = o6.lattice.row(i);
    cond.push_back({2 * r[0] - r[3], 2 * r[1] - r[4], 2 * r[2] - r[5]});
  }
  auto ker = integer_left_kernel(cond);
  if (ker.size() != 3)
    throw std::logic_error("imaginary sublattice has rank != 3");
  std::vector<SexticElement> basis;
  for (const auto& kv : ker) {
    SexticCoords c{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        c[j] += Rational(kv[i]) * o6.lattice.row(i)[j];
    basis.push_back(unflatten(c));
  }
  // Q(x) = Tr_{K+/Q}(x conj(x)) = Tr_{K/Q}(x conj(x)) / 2.
  GramMatrix g(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Rational t =
          sextic_trace(f, sextic_mul(f, basis[i], sextic_conj(basis[j]))) / 2;
      g[i][j] = t;
      g[j][i] = t;
    }
  check_positive_definite(g);
  // The minimum is taken over alpha generating a sextic field: the rational
  // multiples of sqrt(-3) (those with rational K+-part) are excluded, which
  // is what the printed values require.
  auto qualifies = [&](const std::vector<Integer>& v) {
    FieldElement u = CubicField::zero();
    for (int i = 0; i < 3; ++i)
      if (v[i] != 0)
        for (int j = 0; j < 3; ++j)
          u[j] += Rational(v[i]) * basis[i].u[j];
    return !CubicField::is_rational(u);
  };
  Rational ceiling;
  {
    std::optional<Rational> diag;
    for (int i = 0; i < 3; ++i) {
      std::vector<Integer> e(3, Integer(0));
      e[i] = 1;
      if (qualifies(e) && (!diag || g[i][i] < *diag)) diag = g[i][i];
    }
    if (!diag)
      throw std::logic_error("no sextic generator among the basis vectors");
    ceiling = *diag;
  }
  // Grow the search radius until a qualifying vector appears; enumeration at
  // each radius is complete, so the first hit already yields the minimum.
  for (Rational bound(3);; bound *= 2) {
    if (bound > ceiling) bound = ceiling;
    std::optional<Rational> best;
    for (const auto& v : enumerate_short_vectors(g, bound)) {
      if (!qualifies(v)) continue;
      Rational q(0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          q += Rational(v[i]) * g[i][j] * Rational(v[j]);
      if (!best || q < *best) best = q;
    }
    if (best) {
      if (!is_integer(*best))
        throw std::logic_error("B is not a positive integer");
      return best->get_num();
    }
    if (bound == ceiling)
      throw std::logic_error("no qualifying vector up to the diagonal bound");
  }
}

MinkowskiBounds minkowski_bounds(const Integer& disc_oplus) {
  if (disc_oplus <= 0)
    throw std::invalid_argument("minkowski_bounds: disc must be positive");
  MinkowskiBounds b;
  b.t2_bound = certified_minkowski_cap(disc_oplus);
  b.p_bound = b.t2_bound * b.t2_bound * b.t2_bound;
  b.crude_ceiling = certified_crude_prime_ceiling(disc_oplus);
  return b;
}

}  // namespace picardcm
