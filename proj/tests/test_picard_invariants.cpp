#include <doctest.h>

#include <random>

#include "picardcm/picard_invariants.hpp"

using namespace picardcm;

namespace {

std::mt19937 rng(701);

Rational random_q() {
  std::uniform_int_distribution<long> d(-30, 30);
  std::uniform_int_distribution<long> q(1, 4);
  Rational r(d(rng), q(rng));
  r.canonicalize();
  return r;
}

PicardCurve random_curve() {
  while (true) {
    PicardCurve c{random_q(), random_q(), random_q()};
    if (c.a != 0 && c.b != 0 && discriminant(c) != 0) return c;
  }
}

// y^3 = x^4 + a x^2 + b x + c under x -> t^?: the weighted action
// (a, b, c) -> (t^2 a, t^3 b, t^4 c).
PicardCurve scale(const PicardCurve& c, const Rational& t) {
  Rational t2 = t * t;
  return {t2 * c.a, t2 * t * c.b, t2 * t2 * c.c};
}

const PicardCurve kSection3Curve{Rational(-1274), Rational(24440),
                                 Rational(-130975)};

}  // namespace

TEST_CASE("discriminant formula") {
  // y^3 = x^4 - 1: quartic disc of x^4 - 1 is -256... the stored
  // normalization gives 256*(-1)^3 = -256.
  CHECK(discriminant({Rational(0), Rational(0), Rational(-1)}) == -256);
  // Repeated quartic root (x^2 - 1)^2 = x^4 - 2x^2 + 1.
  CHECK(discriminant({Rational(-2), Rational(0), Rational(1)}) == 0);
  // Random check against the resultant-free expansion with the quartic's
  // roots eliminated: disc is a polynomial identity, so compare against an
  // independently coded copy.
  for (int i = 0; i < 50; ++i) {
    PicardCurve c = random_curve();
    const Rational &a = c.a, &b = c.b, &cc = c.c;
    Rational expect = -4 * a * a * a * b * b + 16 * a * a * a * a * cc -
                      27 * b * b * b * b + 144 * a * b * b * cc -
                      128 * a * a * cc * cc + 256 * cc * cc * cc;
    CHECK(discriminant(c) == expect);
  }
}

TEST_CASE("invariant definitions") {
  for (int i = 0; i < 30; ++i) {
    PicardCurve c = random_curve();
    InvariantVector v = invariants(c);
    REQUIRE(v.has_j);
    REQUIRE(v.has_kw);
    REQUIRE(v.has_i);
    CHECK(v.j1 == c.a * c.a * c.a / (c.b * c.b));
    CHECK(v.j2 == c.a * c.c / (c.b * c.b));
    CHECK(v.j3 == c.c * c.c * c.c / (c.b * c.b * c.b * c.b));
    CHECK(v.kw1 == c.b * c.b / (c.a * c.a * c.a));
    CHECK(v.kw2 == c.c / (c.a * c.a));
    CHECK(v.delta == discriminant(c));
    CHECK(v.i1 == c.a * c.a * c.a * c.a * c.a * c.a / v.delta);
    CHECK(v.i4 == c.b * c.b * c.b * c.b / v.delta);
    CHECK(v.i5 == c.c * c.c * c.c / v.delta);
    // Interrelations: j3 = j2^3 / j1, kw1 = 1/j1, kw2 = j2/j1.
    CHECK(v.j3 == v.j2 * v.j2 * v.j2 / v.j1);
    CHECK(v.kw1 == 1 / v.j1);
    CHECK(v.kw2 == v.j2 / v.j1);
  }
}

TEST_CASE("degenerate families are flagged, not computed") {
  InvariantVector v = invariants({Rational(0), Rational(1), Rational(1)});
  CHECK(!v.has_kw);
  CHECK(v.has_j);
  v = invariants({Rational(1), Rational(0), Rational(1)});
  CHECK(!v.has_j);
  CHECK(v.has_kw);
  v = invariants({Rational(-2), Rational(0), Rational(1)});
  CHECK(!v.has_i);  // Delta = 0
}

TEST_CASE("invariants are invariant under the weighted scaling") {
  std::uniform_int_distribution<long> d(1, 40);
  for (int i = 0; i < 100; ++i) {
    PicardCurve c = random_curve();
    Rational t(d(rng), d(rng));
    t.canonicalize();
    if (t == 0) continue;
    InvariantVector v1 = invariants(c);
    InvariantVector v2 = invariants(scale(c, t));
    CHECK(v1.j1 == v2.j1);
    CHECK(v1.j2 == v2.j2);
    CHECK(v1.j3 == v2.j3);
    CHECK(v1.kw1 == v2.kw1);
    CHECK(v1.kw2 == v2.kw2);
    CHECK(v1.i1 == v2.i1);
    CHECK(v1.i2 == v2.i2);
    CHECK(v1.i3 == v2.i3);
    CHECK(v1.i4 == v2.i4);
    CHECK(v1.i5 == v2.i5);
    // And so are the absolute denominators.
    AbsoluteDenominators d1 = absolute_denominators(c);
    AbsoluteDenominators d2 = absolute_denominators(scale(c, t));
    CHECK(d1.den_abs == d2.den_abs);
    CHECK(d1.den_kw_abs == d2.den_kw_abs);
    CHECK(d1.den_delta_abs == d2.den_delta_abs);
  }
}

TEST_CASE("the reference curve's invariants") {
  InvariantVector v = invariants(kSection3Curve);
  CHECK(v.j1 == Rational(-1529437, 441800));
  CHECK(v.j2 == Rational(19747, 70688));
  AbsoluteDenominators d = absolute_denominators(kSection3Curve);
  REQUIRE(d.has_abs);
  CHECK(d.den_abs == FactoredNumber::factorize(Integer(8 * 5 * 47)));
  REQUIRE(d.has_kw);
  // (2^3 * 7^6 * 13)^(1/3)
  FactoredNumber kw;
  kw.set_exponent(Integer(2), Rational(1));
  kw.set_exponent(Integer(7), Rational(2));
  kw.set_exponent(Integer(13), Rational(1, 3));
  CHECK(d.den_kw_abs == kw);
}

TEST_CASE("two closed forms of den_abs agree") {
  // max{v_p(den j1)/2, v_p(den j3)/4} computed here versus the same quantity
  // assembled from (j1, j2) alone.
  for (int i = 0; i < 200; ++i) {
    PicardCurve c = random_curve();
    InvariantVector v = invariants(c);
    AbsoluteDenominators d = absolute_denominators(c);
    FactoredNumber expect;
    Rational j3 = v.j2 * v.j2 * v.j2 / v.j1;
    FactoredNumber d1 = FactoredNumber::factorize(den(v.j1)).pow(Rational(1, 2));
    FactoredNumber d3 = FactoredNumber::factorize(den(j3)).pow(Rational(1, 4));
    CHECK(d.den_abs == FactoredNumber::pointwise_max(d1, d3));
  }
}

TEST_CASE("den_delta equivalence across the i family") {
  for (int i = 0; i < 100; ++i) {
    PicardCurve c = random_curve();
    InvariantVector v = invariants(c);
    AbsoluteDenominators d = absolute_denominators(c);
    FactoredNumber all = FactoredNumber::factorize(den(v.i1));
    for (const Rational& iv : {v.i2, v.i3, v.i4, v.i5})
      all = FactoredNumber::lcm(all, FactoredNumber::factorize(den(iv)));
    CHECK(d.den_delta_abs == all);
  }
}

TEST_CASE("reduction classification of the reference curve") {
  ReductionVerdict v5 = classify_reduction(kSection3Curve, Integer(5));
  CHECK(v5.kind == ReductionVerdict::Kind::case2);
  ReductionVerdict v47 = classify_reduction(kSection3Curve, Integer(47));
  CHECK(v47.kind == ReductionVerdict::Kind::case3);
  // Reduced model y^3 = x^4 + 19 x^2 + 1: the certificate is abar^2 mod 47.
  CHECK(v47.a_bar_squared == (19 * 19) % 47);
  ReductionVerdict v7 = classify_reduction(kSection3Curve, Integer(7));
  CHECK(v7.kind == ReductionVerdict::Kind::none);
}

TEST_CASE("reduction classification validation") {
  CHECK_THROWS(classify_reduction(kSection3Curve, Integer(2)));
  CHECK_THROWS(classify_reduction(kSection3Curve, Integer(3)));
  CHECK_THROWS(classify_reduction(kSection3Curve, Integer(49)));
  CHECK_THROWS(classify_reduction({Rational(1), Rational(0), Rational(1)},
                                  Integer(5)));  // b = 0
}

TEST_CASE("reduction classification on synthetic curves") {
  // Minimum attained only at v(b)/3: none.
  // a = p, b = 1, c = p: m0 = 0 from b.
  ReductionVerdict v = classify_reduction(
      {Rational(5), Rational(1), Rational(5)}, Integer(5));
  CHECK(v.kind == ReductionVerdict::Kind::none);
  // Minimum attained at v(c)/4 strictly: case 1 or 3 depending on a^2 - 4c.
  // a = 25, b = 125, c = 1 at p = 5: m0 = 0 from c; v(a^2 - 4c) = 0 = v(4c):
  // case 3.
  v = classify_reduction({Rational(25), Rational(125), Rational(1)},
                         Integer(5));
  CHECK(v.kind == ReductionVerdict::Kind::case3);
  // Case 1 needs v_p(a^2 - 4c) > v_p(4c): take a^2 = 4c exactly, a = 2, c = 1,
  // b = 5^3 so that only b carries p.
  v = classify_reduction({Rational(2), Rational(125), Rational(1)},
                         Integer(5));
  CHECK(v.kind == ReductionVerdict::Kind::case1);
  // Minimum attained at v(a)/2 strictly and not at b or c: case 2.
  v = classify_reduction({Rational(1), Rational(5), Rational(5)}, Integer(5));
  CHECK(v.kind == ReductionVerdict::Kind::case2);
}

TEST_CASE("reconstruction hits the same geometric class") {
  for (int i = 0; i < 50; ++i) {
    PicardCurve c = random_curve();
    InvariantVector v = invariants(c);
    if (v.j1 == 0) continue;
    PicardCurve d;
    try {
      d = reconstruct(v.j1, v.j2);
    } catch (const std::domain_error&) {
      continue;  // singular model for this invariant pair
    }
    CHECK(geometric_isomorphism(c, d));
  }
  CHECK_THROWS(reconstruct(Rational(0), Rational(1)));
}

TEST_CASE("geometric isomorphism separates distinct classes") {
  PicardCurve c1{Rational(1), Rational(1), Rational(1)};
  PicardCurve c2{Rational(1), Rational(1), Rational(2)};
  CHECK(geometric_isomorphism(c1, c1));
  CHECK(!geometric_isomorphism(c1, c2));
  // Scaling is an isomorphism.
  CHECK(geometric_isomorphism(c1, scale(c1, Rational(3, 2))));
}

TEST_CASE("polynomial helpers") {
  Poly p{Rational(1), Rational(0), Rational(-2)};  // 1 - 2x^2
  CHECK(poly_eval(p, Rational(3)) == 1 - 18);
  Poly dp = poly_derivative(p);
  CHECK(dp == Poly{Rational(0), Rational(-4)});
  Poly q{Rational(1, 2), Rational(1, 3)};
  CHECK(poly_denominator(q) == 6);
}

TEST_CASE("class polynomials interpolate the points") {
  std::vector<std::pair<Rational, Rational>> pts = {
      {Rational(1, 2), Rational(3)},
      {Rational(-2), Rational(5, 7)},
      {Rational(4, 3), Rational(-1, 2)}};
  ClassPolyPair cp = class_polynomials(pts);
  REQUIRE(cp.h1.size() == 4);  // monic cubic
  CHECK(cp.h1.back() == 1);
  Poly dh = poly_derivative(cp.h1);
  for (const auto& [x, y] : pts) {
    CHECK(poly_eval(cp.h1, x) == 0);
    // Second coordinate recovered as Hhat(j1)/H'(j1).
    CHECK(poly_eval(cp.h2hat, x) / poly_eval(dh, x) == y);
  }
  CHECK(cp.den_h1 == poly_denominator(cp.h1));
  CHECK(cp.den_h2hat == poly_denominator(cp.h2hat));
  // Repeated first coordinates are rejected.
  CHECK_THROWS(class_polynomials(
      {{Rational(1), Rational(2)}, {Rational(1), Rational(3)}}));
}

TEST_CASE("certificate verification: hard inclusion and ratios") {
  BoundCertificate cert;
  cert.n_mu.set_exponent(Integer(2), Rational(84));
  cert.n_mu.set_exponent(Integer(7), Rational(3));
  cert.six_n_mu = cert.n_mu * FactoredNumber::factorize(Integer(6));
  cert.primes = cert.six_n_mu.prime_set();
  FactoredNumber good = FactoredNumber::factorize(Integer(8 * 3));
  VerifyReport r = verify_against_certificate({good}, cert);
  CHECK(r.pass);
  CHECK(r.offending_primes.empty());
  FactoredNumber bad = FactoredNumber::factorize(Integer(5));
  r = verify_against_certificate({good, bad}, cert);
  CHECK(!r.pass);
  REQUIRE(r.offending_primes.size() == 1);
  CHECK(r.offending_primes[0] == 5);
}
