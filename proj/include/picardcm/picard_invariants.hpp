#ifndef PICARDCM_PICARD_INVARIANTS_HPP
#define PICARDCM_PICARD_INVARIANTS_HPP

#include <string>
#include <vector>

#include "picardcm/bound_engine.hpp"
#include "picardcm/factored.hpp"

namespace picardcm {

/// The model y^3 = x^4 + a x^2 + b x + c.
struct PicardCurve {
  Rational a, b, c;
  bool operator==(const PicardCurve&) const = default;
};

/// Delta = -4a^3b^2 + 16a^4c - 27b^4 + 144ab^2c - 128a^2c^2 + 256c^3
/// (the discriminant of the quartic).
Rational discriminant(const PicardCurve& cu);

/// The three invariant families; a family that is undefined for the given
/// curve (b = 0, a = 0, or Delta = 0) is flagged absent instead of erroring.
struct InvariantVector {
  Rational delta;
  bool has_j = false;
  Rational j1, j2, j3;  // a^3/b^2, ac/b^2, c^3/b^4
  bool has_kw = false;
  Rational kw1, kw2;  // b^2/a^3, c/a^2
  bool has_i = false;
  Rational i1, i2, i3, i4, i5;  // a^6, a^3b^2, a^4c, b^4, c^3 over Delta
};

InvariantVector invariants(const PicardCurve& cu);

/// den_abs      = prod p^max{v_p(den j1)/2, v_p(den j3)/4}   (needs b != 0)
/// den_kw_abs   = prod p^max{v_p(den kw1)/3, v_p(den kw2)/2} (needs a != 0)
/// den_delta_abs = lcm(den i1, den i4, den i5)               (needs Delta != 0)
struct AbsoluteDenominators {
  bool has_abs = false, has_kw = false, has_delta = false;
  FactoredNumber den_abs, den_kw_abs, den_delta_abs;
};

AbsoluteDenominators absolute_denominators(const PicardCurve& cu);

/// Reduction type at p (p coprime to 6) from the valuation minimum
/// m0 = min{v(a)/2, v(b)/3, v(c)/4}.
struct ReductionVerdict {
  enum class Kind { none, case1, case2, case3 };
  Kind kind = Kind::none;
  Integer p;
  Rational m0;
  // Valuations v_p(a), v_p(b), v_p(c); the _finite flags cover zero
  // coefficients (infinite valuation).
  long va = 0, vb = 0, vc = 0;
  bool va_finite = true, vc_finite = true;
  // Case 3 certificate: residue of the rescaled a^2/c (the square of the
  // reduced-model coefficient), in [0, p).
  Integer a_bar_squared;
  std::string reason;  // for kind none
};

ReductionVerdict classify_reduction(const PicardCurve& cu, const Integer& p);

/// D: y^3 = x^4 + j1 x^2 + j1 x + j1 j2, geometrically isomorphic to any
/// curve with these invariants. Throws on j1 = 0 or a singular result.
PicardCurve reconstruct(const Rational& j1, const Rational& j2);

/// Isomorphism over the algebraic closure, decided on invariants.
bool geometric_isomorphism(const PicardCurve& c1, const PicardCurve& c2);

/// Dense polynomial, ascending coefficients.
using Poly = std::vector<Rational>;

Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);
Integer poly_denominator(const Poly& p);  // lcm of coefficient denominators

/// H(X) = prod (X - j1_k) and Hhat(X) = sum_k j2_k prod_{l != k} (X - j1_l);
/// j2_k = Hhat(j1_k) / H'(j1_k).
struct ClassPolyPair {
  Poly h1;
  Poly h2hat;
  Integer den_h1;
  Integer den_h2hat;
};

ClassPolyPair class_polynomials(
    const std::vector<std::pair<Rational, Rational>>& points);

/// Divisibility check: every prime in any of the denominators divides 6 N_mu
/// (hard pass/fail), plus informational per-prime exponent ratios against
/// (1/3) v_p(N_mu).
struct VerifyReport {
  bool pass = true;
  std::vector<Integer> offending_primes;
  struct Ratio {
    Integer p;
    Rational den_exponent;
    Rational third_of_n_mu_exponent;
  };
  std::vector<Ratio> ratios;
};

VerifyReport verify_against_certificate(const std::vector<FactoredNumber>& dens,
                                        const BoundCertificate& cert);

}  // namespace picardcm

#endif
