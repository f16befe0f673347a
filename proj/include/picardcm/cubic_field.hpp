#ifndef PICARDCM_CUBIC_FIELD_HPP
#define PICARDCM_CUBIC_FIELD_HPP

#include <array>
#include <optional>

#include "picardcm/numeric.hpp"

namespace picardcm {

/// Coordinates q0 + q1*alpha + q2*alpha^2 in the power basis of the field
/// generator.
using FieldElement = std::array<Rational, 3>;

/// Coefficients of a monic cubic x^3 + c2 x^2 + c1 x + c0 (ascending).
struct CubicPoly {
  Rational c0, c1, c2;
  Rational disc() const;
  Rational eval(const Rational& x) const;
  bool operator==(const CubicPoly&) const = default;
};

/// A totally real cubic field K+ = Q[x]/(x^3 + c2 x^2 + c1 x + c0) with
/// integer coefficients. Construction validates irreducibility over Q and
/// positivity of the discriminant.
class CubicField {
 public:
  CubicField(Integer c0, Integer c1, Integer c2);

  const Integer& c0() const { return c0_; }
  const Integer& c1() const { return c1_; }
  const Integer& c2() const { return c2_; }
  const Integer& poly_disc() const { return poly_disc_; }

  bool operator==(const CubicField& o) const {
    return c0_ == o.c0_ && c1_ == o.c1_ && c2_ == o.c2_;
  }

  static FieldElement zero() { return {Rational(0), Rational(0), Rational(0)}; }
  static FieldElement one() { return {Rational(1), Rational(0), Rational(0)}; }
  static FieldElement generator() {
    return {Rational(0), Rational(1), Rational(0)};
  }
  static FieldElement from_rational(const Rational& q) {
    return {q, Rational(0), Rational(0)};
  }
  static bool is_rational(const FieldElement& x) {
    return x[1] == 0 && x[2] == 0;
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const Rational& q) const;
  FieldElement inverse(const FieldElement& a) const;

  Rational trace(const FieldElement& a) const;
  Rational norm(const FieldElement& a) const;

  /// Exact minimal polynomial: degree 1 (rational element, returned as the
  /// linear factor's data in a CubicPoly is impossible) or the degree-3
  /// characteristic polynomial. Degree is the .first member.
  struct MinPoly {
    int degree;      // 1 or 3
    Rational t1, a1, n;  // x^3 - t1 x^2 + a1 x - n when degree 3;
                         // x - t1 when degree 1
  };
  MinPoly minpoly(const FieldElement& a) const;

  /// Power sums of the roots of the defining polynomial (Newton identities).
  Rational power_sum(int k) const;

 private:
  Integer c0_, c1_, c2_;
  Integer poly_disc_;
  std::array<Rational, 5> power_sums_;  // Tr(alpha^k), k = 0..4
};

/// Element u + v*zeta3 of the sextic CM field K = K+(zeta3).
struct SexticElement {
  FieldElement u, v;
  bool operator==(const SexticElement&) const = default;
};

SexticElement sextic_add(const CubicField& f, const SexticElement& a,
                         const SexticElement& b);
SexticElement sextic_mul(const CubicField& f, const SexticElement& a,
                         const SexticElement& b);
/// Complex conjugation: fixes K+, sends zeta3 to zeta3^2 = -1 - zeta3.
SexticElement sextic_conj(const SexticElement& a);
/// Trace from K down to Q.
Rational sextic_trace(const CubicField& f, const SexticElement& a);

/// Coordinates of a sextic element in the flat basis
/// (1, alpha, alpha^2, zeta3, alpha*zeta3, alpha^2*zeta3).
using SexticCoords = std::array<Rational, 6>;

inline SexticCoords flatten(const SexticElement& a) {
  return {a.u[0], a.u[1], a.u[2], a.v[0], a.v[1], a.v[2]};
}
inline SexticElement unflatten(const SexticCoords& c) {
  return {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}};
}

}  // namespace picardcm

#endif
