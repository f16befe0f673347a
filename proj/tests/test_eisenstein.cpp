#include <doctest.h>

#include <random>

#include "picardcm/eisenstein.hpp"

using namespace picardcm;

namespace {

std::mt19937 rng(211);

Rational random_q() {
  std::uniform_int_distribution<long> d(-20, 20);
  std::uniform_int_distribution<long> q(1, 5);
  Rational r(d(rng), q(rng));
  r.canonicalize();
  return r;
}

Eisenstein random_eis() { return {random_q(), random_q()}; }

Matrix3 random_matrix() {
  Matrix3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = random_eis();
  return m;
}

}  // namespace

TEST_CASE("zeta3 relations") {
  Eisenstein z = Eisenstein::zeta();
  CHECK(z * z == Eisenstein(Rational(-1), Rational(-1)));  // z^2 = -1 - z
  CHECK(z * z * z == Eisenstein(Rational(1)));
  Eisenstein r = Eisenstein::sqrt_minus_three();
  CHECK(r * r == Eisenstein(Rational(-3)));
  CHECK(r.conj() == -r);  // purely imaginary
}

TEST_CASE("ring axioms on random elements") {
  for (int i = 0; i < 100; ++i) {
    Eisenstein a = random_eis(), b = random_eis(), c = random_eis();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Eisenstein());
  }
}

TEST_CASE("conjugation and norm are multiplicative") {
  for (int i = 0; i < 100; ++i) {
    Eisenstein a = random_eis(), b = random_eis();
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a.conj().conj() == a);
    // N(a) = a * conj(a), which lands in Q.
    Eisenstein p = a * a.conj();
    CHECK(p.is_rational());
    CHECK(p.c == a.norm());
  }
}

TEST_CASE("norm is positive definite") {
  for (int i = 0; i < 50; ++i) {
    Eisenstein a = random_eis();
    if (a == Eisenstein())
      CHECK(a.norm() == 0);
    else
      CHECK(a.norm() > 0);
  }
}

TEST_CASE("matrix arithmetic") {
  Matrix3 id = Matrix3::identity();
  for (int i = 0; i < 30; ++i) {
    Matrix3 a = random_matrix(), b = random_matrix(), c = random_matrix();
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).trace() == a.trace() + b.trace());
    CHECK((a * b).trace() == (b * a).trace());
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("matrix scalar and pow") {
  Eisenstein s = random_eis();
  Matrix3 m = random_matrix();
  CHECK(Matrix3::scalar(s) * m == m * s);
  CHECK(m.pow(0) == Matrix3::identity());
  CHECK(m.pow(1) == m);
  CHECK(m.pow(3) == m * m * m);
  CHECK(m.pow(5) == m.pow(2) * m.pow(3));
}
