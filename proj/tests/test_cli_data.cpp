#include <doctest.h>

#include <cstdlib>

#include "picardcm/examples.hpp"

using namespace picardcm;

namespace {

std::string data_path() {
  const char* p = std::getenv("PICARDCM_DATA");
  return p ? p : "data/examples.json";
}

}  // namespace

TEST_CASE("json round trips for the boundary types") {
  FactoredNumber f = FactoredNumber::factorize(Integer(-360));
  CHECK(factored_from_json(factored_to_json(f)) == f);
  FactoredNumber frac_exp;
  frac_exp.set_exponent(Integer(7), Rational(2, 3));
  CHECK(factored_from_json(factored_to_json(frac_exp)) == frac_exp);
  PicardCurve cu{Rational(-1274), Rational(24440), Rational(-130975)};
  CHECK(curve_from_json(curve_to_json(cu)) == cu);
  PicardCurve rational_cu{Rational(1, 2), Rational(-3, 7), Rational(5)};
  CHECK(curve_from_json(curve_to_json(rational_cu)) == rational_cu);
}

TEST_CASE("rationals serialize as p/q strings") {
  Json j = curve_to_json({Rational(1, 2), Rational(-3), Rational(0)});
  CHECK(j["a"] == "1/2");
  CHECK(j["b"] == "-3");
  CHECK(j["c"] == "0");
}

TEST_CASE("certificate serialization is deterministic") {
  CubicField f(1, -2, -1);
  OrderBasis o6 = sextic_order_from_cubic(f, maximal_order(f));
  FieldElement mu{Rational(3), Rational(0), Rational(-2)};
  Json a = certificate_to_json(compute_N_mu(f, o6, mu));
  Json b = certificate_to_json(compute_N_mu(f, o6, mu, 4));
  CHECK(a.dump() == b.dump());
  CHECK(a.contains("N_mu"));
  CHECK(a.contains("prime_set"));
}

TEST_CASE("shipped example data loads and is well formed") {
  auto recs = load_examples(data_path());
  REQUIRE(recs.size() == 9);
  for (size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].id == static_cast<int>(i) + 1);
    CHECK(recs[i].expected_n_mu.sign() == 1);
    // The field constructs (irreducible, totally real).
    CHECK_NOTHROW(CubicField(recs[i].c0, recs[i].c1, recs[i].c2));
  }
  // Spot values: first record is (2^28 * 7 * 13)^3 over x^3 - x^2 - 2x + 1.
  const ExampleRecord& r1 = recs[0];
  CHECK(r1.c0 == 1);
  CHECK(r1.c1 == -2);
  CHECK(r1.c2 == -1);
  CHECK(r1.mu == FieldElement{Rational(3), Rational(0), Rational(-2)});
  CHECK(r1.expected_n_mu.exponent(Integer(2)) == 84);
  CHECK(r1.expected_n_mu.exponent(Integer(7)) == 3);
  CHECK(r1.expected_n_mu.exponent(Integer(13)) == 3);
  CHECK(r1.has_b);
  CHECK(r1.constant_b == 15);
  // Record 2 carries the explicit curve model.
  CHECK(recs[1].has_curve);
  CHECK(recs[1].curve.a == -1274);
  // Records 8 and 9 carry class-polynomial denominators.
  CHECK(recs[7].has_classpoly);
  CHECK(recs[8].has_classpoly);
}

TEST_CASE("printed-approximation matcher") {
  // 7.2 * 10^10 as two significant digits.
  CHECK(matches_printed_approx(Rational(Integer("72000000000")), "72", 10));
  CHECK(matches_printed_approx(Rational(Integer("71500000001")), "72", 10));
  CHECK(!matches_printed_approx(Rational(Integer("73000000000")), "72", 10));
  // B = 15: B^10/8 = 72075958251953125/1000... times 8.
  Integer b10 = 1;
  for (int i = 0; i < 10; ++i) b10 *= 15;
  CHECK(matches_printed_approx(Rational(b10) / 8, "72", 10));
}

TEST_CASE("denominator recomputation from the invariant pair") {
  Rational j1(-1529437, 441800), j2(19747, 70688);
  FactoredNumber abs = den_abs_from_j(j1, j2);
  CHECK(abs == FactoredNumber::factorize(Integer(8 * 5 * 47)));
  FactoredNumber kw = den_kw_abs_from_j(j1, j2);
  CHECK(kw.exponent(Integer(2)) == 1);
  CHECK(kw.exponent(Integer(7)) == 2);
  CHECK(kw.exponent(Integer(13)) == Rational(1, 3));
  // Agrees with the curve-side computation.
  PicardCurve cu{Rational(-1274), Rational(24440), Rational(-130975)};
  AbsoluteDenominators d = absolute_denominators(cu);
  CHECK(d.den_abs == abs);
  CHECK(d.den_kw_abs == kw);
}

TEST_CASE("run_example on the two fast records") {
  auto recs = load_examples(data_path());
  for (int id : {1, 2}) {
    ExampleOutcome out = run_example(recs[id - 1]);
    CHECK(out.pass);
    if (!out.pass)
      for (const auto& n : out.notes) MESSAGE(n);
  }
}
