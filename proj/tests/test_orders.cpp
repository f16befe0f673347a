#include <doctest.h>

#include <array>
#include <vector>

#include "picardcm/factored.hpp"
#include "picardcm/orders.hpp"

using namespace picardcm;

namespace {

// The nine reference fields.
const std::vector<std::array<long, 3>> kFields = {
    {1, -2, -1},    {-1, -4, -1},  {-8, -10, 1},
    {-8, -14, -1},  {-28, -21, 0}, {-35, -21, 0},
    {-26, -39, 0},  {-183, -61, 0}, {-5, -22, -1}};

QMatrix power_basis_rows() {
  QMatrix rows(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i) rows[i][i] = 1;
  return rows;
}

}  // namespace

TEST_CASE("order_mul and order_trace agree with the field") {
  CubicField f(-1, -4, -1);
  QVector a{Rational(1), Rational(2), Rational(-1)};
  QVector b{Rational(0), Rational(1, 2), Rational(3)};
  FieldElement fa{a[0], a[1], a[2]}, fb{b[0], b[1], b[2]};
  FieldElement fp = f.mul(fa, fb);
  QVector p = order_mul(f, 3, a, b);
  CHECK(p == QVector{fp[0], fp[1], fp[2]});
  CHECK(order_trace(f, 3, a) == f.trace(fa));
}

TEST_CASE("power basis is a ring lattice; skew lattices are not") {
  CubicField f(1, -2, -1);
  CHECK(is_ring_lattice(f, 3, QLattice(power_basis_rows())));
  // alpha/2 alone does not generate a ring over this basis.
  QMatrix bad = power_basis_rows();
  bad[1][1] = Rational(1, 2);
  CHECK(!is_ring_lattice(f, 3, QLattice(bad)));
}

TEST_CASE("lattice_disc of the power basis equals the polynomial disc") {
  for (const auto& [c0, c1, c2] : kFields) {
    CubicField f(c0, c1, c2);
    CHECK(lattice_disc(f, 3, QLattice(power_basis_rows())) == f.poly_disc());
  }
}

TEST_CASE("maximal order: ring closure, containment, disc shape") {
  for (const auto& [c0, c1, c2] : kFields) {
    CubicField f(c0, c1, c2);
    OrderBasis o = maximal_order(f);
    REQUIRE(o.rank == 3);
    CHECK(is_ring_lattice(f, 3, o.lattice));
    // Contains Z[alpha].
    for (const auto& row : power_basis_rows()) CHECK(o.lattice.contains(row));
    // disc(Z[alpha]) = [O : Z[alpha]]^2 * disc(O).
    Rational idx = o.lattice.index_of_sublattice(QLattice(power_basis_rows()));
    CHECK(is_integer(idx));
    CHECK(Rational(f.poly_disc()) == idx * idx * Rational(o.disc));
    CHECK(o.disc > 0);
    CHECK(lattice_disc(f, 3, o.lattice) == o.disc);
  }
}

TEST_CASE("known field discriminants") {
  CHECK(maximal_order(CubicField(1, -2, -1)).disc == 49);
  CHECK(maximal_order(CubicField(-1, -4, -1)).disc == 169);
  // x^3 - 21x - 28: poly disc 15876 = 4 * 3969, index 2.
  CHECK(maximal_order(CubicField(-28, -21, 0)).disc == 3969);
}

TEST_CASE("p_saturate reaches a fixpoint certified at every square prime") {
  for (const auto& [c0, c1, c2] : kFields) {
    CubicField f(c0, c1, c2);
    OrderBasis o = maximal_order(f);
    for (const auto& [p, e] : factor_integer(o.disc)) {
      if (e < 2) continue;
      OrderBasis again = p_saturate(f, o, p);
      CHECK(again.disc == o.disc);
      CHECK(again.lattice == o.lattice);
    }
  }
}

TEST_CASE("dedekind criterion agrees with round-2 saturation") {
  for (const auto& [c0, c1, c2] : kFields) {
    CubicField f(c0, c1, c2);
    OrderBasis za = make_order(f, 3, QLattice(power_basis_rows()));
    for (const auto& [p, e] : factor_integer(f.poly_disc())) {
      if (e < 2) continue;
      OrderBasis sat = p_saturate(f, za, p);
      bool enlarged = sat.disc != za.disc;
      CHECK(dedekind_is_p_maximal(f, p) == !enlarged);
    }
  }
  // Regression: x^3 - 21x - 28 at p = 2 has a repeated factor of
  // multiplicity 2 mod 2 and Z[alpha] is not 2-maximal.
  CHECK(!dedekind_is_p_maximal(CubicField(-28, -21, 0), Integer(2)));
  CHECK(dedekind_is_p_maximal(CubicField(-28, -21, 0), Integer(3)));
}

TEST_CASE("sextic order from cubic") {
  for (const auto& [c0, c1, c2] : kFields) {
    CubicField f(c0, c1, c2);
    OrderBasis op = maximal_order(f);
    OrderBasis o6 = sextic_order_from_cubic(f, op);
    REQUIRE(o6.rank == 6);
    CHECK(is_ring_lattice(f, 6, o6.lattice));
    // Contains O+ and O+ * zeta3.
    for (int i = 0; i < 3; ++i) {
      QVector real(6, Rational(0)), imag(6, Rational(0));
      for (int j = 0; j < 3; ++j) {
        real[j] = op.lattice.row(i)[j];
        imag[3 + j] = op.lattice.row(i)[j];
      }
      CHECK(o6.lattice.contains(real));
      CHECK(o6.lattice.contains(imag));
    }
    CHECK(o6.disc != 0);
    // Its real part recovers O+ exactly.
    OrderBasis real_part = real_suborder(f, o6);
    CHECK(real_part.lattice == op.lattice);
  }
}

TEST_CASE("Z + 2O has index 2^(rank-1)") {
  CubicField f(-1, -4, -1);
  OrderBasis op = maximal_order(f);
  OrderBasis sub3 = z_plus_2O(f, op);
  CHECK(op.lattice.index_of_sublattice(sub3.lattice) == 4);
  CHECK(is_ring_lattice(f, 3, sub3.lattice));
  QVector one3(3, Rational(0));
  one3[0] = 1;
  CHECK(sub3.lattice.contains(one3));
  OrderBasis o6 = sextic_order_from_cubic(f, op);
  OrderBasis sub6 = z_plus_2O(f, o6);
  CHECK(o6.lattice.index_of_sublattice(sub6.lattice) == 32);
  CHECK(is_ring_lattice(f, 6, sub6.lattice));
}

TEST_CASE("express_in_power_basis round trip") {
  CubicField f(1, -2, -1);
  FieldElement mu{Rational(3), Rational(0), Rational(-2)};
  SexticElement w{{Rational(1), Rational(2), Rational(-1)},
                  {Rational(0), Rational(1, 2), Rational(3)}};
  auto c = express_in_power_basis(f, w, mu);
  // Rebuild w as sum c_i mu^i + (sum c_{3+i} mu^i) zeta3.
  FieldElement u = CubicField::zero(), v = CubicField::zero();
  FieldElement pw = CubicField::one();
  for (int i = 0; i < 3; ++i) {
    u = f.add(u, f.mul(pw, c[i]));
    v = f.add(v, f.mul(pw, c[3 + i]));
    pw = f.mul(pw, mu);
  }
  CHECK(u == w.u);
  CHECK(v == w.v);
  CHECK_THROWS(express_in_power_basis(f, w, CubicField::from_rational(2)));
}

TEST_CASE("user-supplied sextic basis is verified") {
  CubicField f(1, -2, -1);
  QMatrix rows(6, QVector(6, Rational(0)));
  for (int i = 0; i < 6; ++i) rows[i][i] = 1;
  OrderBasis o = sextic_order_from_rows(f, rows);
  CHECK(o.rank == 6);
  rows[1][1] = Rational(1, 2);
  CHECK_THROWS(sextic_order_from_rows(f, rows));
}
