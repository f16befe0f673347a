#include "picardcm/cubic_field.hpp"

#include "picardcm/factored.hpp"

namespace picardcm {

Rational CubicPoly::disc() const {
  // disc(x^3 + c2 x^2 + c1 x + c0)
  return Rational(18) * c2 * c1 * c0 - Rational(4) * c2 * c2 * c2 * c0 +
         c2 * c2 * c1 * c1 - Rational(4) * c1 * c1 * c1 -
         Rational(27) * c0 * c0;
}

Rational CubicPoly::eval(const Rational& x) const {
  return ((x + c2) * x + c1) * x + c0;
}

namespace {

bool has_rational_root(const Integer& c0, const Integer& c1,
                       const Integer& c2) {
  // A monic integer cubic has a rational root iff it has an integer root,
  // which must divide c0.
  if (c0 == 0) return true;
  CubicPoly p{Rational(c0), Rational(c1), Rational(c2)};
  Integer a = abs(c0);
  for (Integer d = 1; d * d <= a; ++d) {
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) continue;
    Integer other = a / d;
    for (const Integer& r : {d, other}) {
      if (p.eval(Rational(r)) == 0 || p.eval(Rational(-r)) == 0) return true;
    }
  }
  return false;
}

}  // namespace

CubicField::CubicField(Integer c0, Integer c1, Integer c2)
    : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {
  CubicPoly p{Rational(c0_), Rational(c1_), Rational(c2_)};
  Rational d = p.disc();
  poly_disc_ = d.get_num();
  if (has_rational_root(c0_, c1_, c2_))
    throw std::invalid_argument("defining polynomial is reducible over Q");
  if (d <= 0)
    throw std::invalid_argument(
        "defining polynomial is not totally real (disc <= 0)");
  // Newton identities for Tr(alpha^k).
  Rational e1 = Rational(-c2_), e2 = Rational(c1_), e3 = Rational(-c0_);
  power_sums_[0] = 3;
  power_sums_[1] = e1;
  power_sums_[2] = e1 * power_sums_[1] - 2 * e2;
  power_sums_[3] = e1 * power_sums_[2] - e2 * power_sums_[1] + 3 * e3;
  power_sums_[4] =
      e1 * power_sums_[3] - e2 * power_sums_[2] + e3 * power_sums_[1];
}

Rational CubicField::power_sum(int k) const { return power_sums_.at(k); }

FieldElement CubicField::add(const FieldElement& a,
                             const FieldElement& b) const {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

FieldElement CubicField::sub(const FieldElement& a,
                             const FieldElement& b) const {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

FieldElement CubicField::neg(const FieldElement& a) const {
  return {-a[0], -a[1], -a[2]};
}

FieldElement CubicField::mul(const FieldElement& a, const Rational& q) const {
  return {a[0] * q, a[1] * q, a[2] * q};
}

FieldElement CubicField::mul(const FieldElement& a,
                             const FieldElement& b) const {
  std::array<Rational, 5> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i + j] += a[i] * b[j];
  // alpha^3 = -c2 alpha^2 - c1 alpha - c0
  for (int d = 4; d >= 3; --d) {
    Rational t = r[d];
    r[d] = 0;
    r[d - 1] -= Rational(c2_) * t;
    r[d - 2] -= Rational(c1_) * t;
    r[d - 3] -= Rational(c0_) * t;
  }
  return {r[0], r[1], r[2]};
}

Rational CubicField::trace(const FieldElement& a) const {
  return a[0] * power_sums_[0] + a[1] * power_sums_[1] + a[2] * power_sums_[2];
}

Rational CubicField::norm(const FieldElement& a) const {
  // Determinant of the multiplication-by-a matrix.
  FieldElement col1 = a;
  FieldElement col2 = mul(a, generator());
  FieldElement col3 = mul(col2, generator());
  return col1[0] * (col2[1] * col3[2] - col2[2] * col3[1]) -
         col2[0] * (col1[1] * col3[2] - col1[2] * col3[1]) +
         col3[0] * (col1[1] * col2[2] - col1[2] * col2[1]);
}

CubicField::MinPoly CubicField::minpoly(const FieldElement& a) const {
  if (is_rational(a)) return {1, a[0], Rational(0), Rational(0)};
  MinPoly mp;
  mp.degree = 3;
  mp.t1 = trace(a);
  mp.n = norm(a);
  // a1 = e2 of the conjugates = (t1^2 - Tr(a^2)) / 2
  mp.a1 = (mp.t1 * mp.t1 - trace(mul(a, a))) / 2;
  return mp;
}

FieldElement CubicField::inverse(const FieldElement& a) const {
  MinPoly mp = minpoly(a);
  if (mp.degree == 1) {
    if (a[0] == 0) throw std::domain_error("inverse of zero");
    return from_rational(1 / a[0]);
  }
  // a^3 - t1 a^2 + a1 a - n = 0  =>  a^-1 = (a^2 - t1 a + a1)/n
  FieldElement a2 = mul(a, a);
  FieldElement r = add(sub(a2, mul(a, mp.t1)), from_rational(mp.a1));
  return mul(r, 1 / mp.n);
}

SexticElement sextic_add(const CubicField& f, const SexticElement& a,
                         const SexticElement& b) {
  return {f.add(a.u, b.u), f.add(a.v, b.v)};
}

SexticElement sextic_mul(const CubicField& f, const SexticElement& a,
                         const SexticElement& b) {
  // (u1 + v1 z)(u2 + v2 z) = u1u2 - v1v2 + (u1v2 + v1u2 - v1v2) z
  FieldElement uu = f.mul(a.u, b.u);
  FieldElement vv = f.mul(a.v, b.v);
  FieldElement uv = f.mul(a.u, b.v);
  FieldElement vu = f.mul(a.v, b.u);
  return {f.sub(uu, vv), f.sub(f.add(uv, vu), vv)};
}

SexticElement sextic_conj(const SexticElement& a) {
  SexticElement r;
  for (int i = 0; i < 3; ++i) {
    r.u[i] = a.u[i] - a.v[i];
    r.v[i] = -a.v[i];
  }
  return r;
}

Rational sextic_trace(const CubicField& f, const SexticElement& a) {
  // Tr_{K/K+}(u + v z) = 2u - v.
  return 2 * f.trace(a.u) - f.trace(a.v);
}

}  // namespace picardcm
