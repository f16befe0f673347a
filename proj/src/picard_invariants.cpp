#include "picardcm/picard_invariants.hpp"

#include <algorithm>
#include <set>

namespace picardcm {

namespace {

// mpq_class(n, d) does not canonicalize; this does.
Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Rational discriminant(const PicardCurve& cu) {
  const Rational &a = cu.a, &b = cu.b, &c = cu.c;
  return -4 * a * a * a * b * b + 16 * a * a * a * a * c - 27 * b * b * b * b +
         144 * a * b * b * c - 128 * a * a * c * c + 256 * c * c * c;
}

InvariantVector invariants(const PicardCurve& cu) {
  const Rational &a = cu.a, &b = cu.b, &c = cu.c;
  InvariantVector v;
  v.delta = discriminant(cu);
  if (b != 0) {
    v.has_j = true;
    Rational b2 = b * b;
    v.j1 = a * a * a / b2;
    v.j2 = a * c / b2;
    v.j3 = c * c * c / (b2 * b2);
  }
  if (a != 0) {
    v.has_kw = true;
    v.kw1 = b * b / (a * a * a);
    v.kw2 = c / (a * a);
  }
  if (v.delta != 0) {
    v.has_i = true;
    v.i1 = a * a * a * a * a * a / v.delta;
    v.i2 = a * a * a * b * b / v.delta;
    v.i3 = a * a * a * a * c / v.delta;
    v.i4 = b * b * b * b / v.delta;
    v.i5 = c * c * c / v.delta;
  }
  return v;
}

AbsoluteDenominators absolute_denominators(const PicardCurve& cu) {
  InvariantVector v = invariants(cu);
  AbsoluteDenominators d;
  if (v.has_j) {
    d.has_abs = true;
    d.den_abs = FactoredNumber::pointwise_max(
        FactoredNumber::factorize(den(v.j1)).pow(frac(1, 2)),
        FactoredNumber::factorize(den(v.j3)).pow(frac(1, 4)));
  }
  if (v.has_kw) {
    d.has_kw = true;
    d.den_kw_abs = FactoredNumber::pointwise_max(
        FactoredNumber::factorize(den(v.kw1)).pow(frac(1, 3)),
        FactoredNumber::factorize(den(v.kw2)).pow(frac(1, 2)));
  }
  if (v.has_i) {
    d.has_delta = true;
    d.den_delta_abs = FactoredNumber::lcm(
        FactoredNumber::lcm(FactoredNumber::factorize(den(v.i1)),
                            FactoredNumber::factorize(den(v.i4))),
        FactoredNumber::factorize(den(v.i5)));
  }
  return d;
}

namespace {

// Residue in [0, p) of a rational with nonnegative p-valuation.
Integer residue_mod_p(const Rational& q, const Integer& p) {
  if (q == 0) return 0;
  if (padic_valuation(q, p) > 0) return 0;
  Integer n = num(q) % p, d = den(q) % p, inv;
  if (n < 0) n += p;
  if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::logic_error("residue_mod_p: denominator not invertible");
  return ((n * inv) % p + p) % p;
}

}  // namespace

ReductionVerdict classify_reduction(const PicardCurve& cu, const Integer& p) {
  if (p < 5 || p % 2 == 0 || p % 3 == 0 || !is_prime(p))
    throw std::invalid_argument("classify_reduction: need a prime coprime to 6");
  if (cu.b == 0)
    throw std::invalid_argument("classify_reduction: b must be nonzero");
  ReductionVerdict r;
  r.p = p;
  r.vb = padic_valuation(cu.b, p);
  Rational qb = frac(r.vb, 3);
  r.m0 = qb;
  if (cu.a != 0) {
    r.va = padic_valuation(cu.a, p);
    r.m0 = std::min(r.m0, frac(r.va, 2));
  } else {
    r.va_finite = false;
  }
  if (cu.c != 0) {
    r.vc = padic_valuation(cu.c, p);
    r.m0 = std::min(r.m0, frac(r.vc, 4));
  } else {
    r.vc_finite = false;
  }
  if (qb == r.m0) {
    r.kind = ReductionVerdict::Kind::none;
    r.reason = "min attained by v(b)/3";
    return r;
  }
  if (r.vc_finite && frac(r.vc, 4) == r.m0) {
    // Rescaled model with c = 1; discriminant of the reduced quartic
    // x^4 + abar x^2 + 1 vanishes iff abar = +-2, i.e. a^2/c reduces to 4.
    Rational shifted = cu.a * cu.a - 4 * cu.c;
    bool degenerate = shifted == 0 ||
                      Rational(padic_valuation(shifted, p)) >
                          Rational(padic_valuation(4 * cu.c, p));
    if (degenerate) {
      r.kind = ReductionVerdict::Kind::case1;
      r.a_bar_squared = residue_mod_p(cu.a * cu.a / cu.c, p);
    } else {
      r.kind = ReductionVerdict::Kind::case3;
      r.a_bar_squared = residue_mod_p(cu.a * cu.a / cu.c, p);
    }
    return r;
  }
  r.kind = ReductionVerdict::Kind::case2;
  return r;
}

PicardCurve reconstruct(const Rational& j1, const Rational& j2) {
  if (j1 == 0) throw std::invalid_argument("reconstruct: j1 must be nonzero");
  PicardCurve cu{j1, j1, j1 * j2};
  if (discriminant(cu) == 0)
    throw std::domain_error("reconstruct: singular model");
  return cu;
}

bool geometric_isomorphism(const PicardCurve& c1, const PicardCurve& c2) {
  if (c1.b == 0 || c2.b == 0)
    throw std::invalid_argument("geometric_isomorphism: b must be nonzero");
  InvariantVector v1 = invariants(c1), v2 = invariants(c2);
  if ((c1.a == 0) != (c2.a == 0)) return false;
  if (c1.a != 0) return v1.j1 == v2.j1 && v1.j2 == v2.j2;
  if ((c1.c == 0) != (c2.c == 0)) return false;
  if (c1.c == 0) return true;  // y^3 = x^4 + bx, all b equivalent
  return v1.j3 == v2.j3;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rational(i) * p[i]);
  return d;
}

Integer poly_denominator(const Poly& p) {
  Integer d = 1;
  for (const auto& c : p)
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den().get_mpz_t());
  return d;
}

namespace {

Poly poly_mul_linear(const Poly& p, const Rational& root) {
  // multiply by (X - root)
  Poly r(p.size() + 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    r[i + 1] += p[i];
    r[i] -= root * p[i];
  }
  return r;
}

}  // namespace

ClassPolyPair class_polynomials(
    const std::vector<std::pair<Rational, Rational>>& points) {
  std::set<Rational> seen;
  for (const auto& [j1, j2] : points)
    if (!seen.insert(j1).second)
      throw std::invalid_argument("class_polynomials: repeated j1 value");
  ClassPolyPair out;
  out.h1 = {Rational(1)};
  for (const auto& [j1, j2] : points) out.h1 = poly_mul_linear(out.h1, j1);
  out.h2hat = {};
  for (size_t k = 0; k < points.size(); ++k) {
    Poly term = {points[k].second};
    for (size_t l = 0; l < points.size(); ++l)
      if (l != k) term = poly_mul_linear(term, points[l].first);
    if (term.size() > out.h2hat.size()) out.h2hat.resize(term.size(), Rational(0));
    for (size_t i = 0; i < term.size(); ++i) out.h2hat[i] += term[i];
  }
  out.den_h1 = poly_denominator(out.h1);
  out.den_h2hat = poly_denominator(out.h2hat);
  return out;
}

VerifyReport verify_against_certificate(const std::vector<FactoredNumber>& dens,
                                        const BoundCertificate& cert) {
  VerifyReport rep;
  std::set<Integer> primes;
  for (const auto& d : dens)
    for (const auto& [p, e] : d.factors())
      if (e > 0) primes.insert(p);
  for (const auto& p : primes) {
    Rational den_exp(0);
    for (const auto& d : dens) den_exp = std::max(den_exp, d.exponent(p));
    if (cert.six_n_mu.exponent(p) <= 0) {
      rep.pass = false;
      rep.offending_primes.push_back(p);
    }
    rep.ratios.push_back({p, den_exp, cert.n_mu.exponent(p) / 3});
  }
  return rep;
}

}  // namespace picardcm
