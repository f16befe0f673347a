#include "picardcm/orders.hpp"

#include <algorithm>

#include "picardcm/factored.hpp"

namespace picardcm {

QVector order_mul(const CubicField& f, int rank, const QVector& a,
                  const QVector& b) {
  if (rank == 3) {
    FieldElement x{a[0], a[1], a[2]}, y{b[0], b[1], b[2]};
    FieldElement z = f.mul(x, y);
    return {z[0], z[1], z[2]};
  }
  SexticElement x = unflatten({a[0], a[1], a[2], a[3], a[4], a[5]});
  SexticElement y = unflatten({b[0], b[1], b[2], b[3], b[4], b[5]});
  SexticCoords z = flatten(sextic_mul(f, x, y));
  return QVector(z.begin(), z.end());
}

Rational order_trace(const CubicField& f, int rank, const QVector& a) {
  if (rank == 3) return f.trace({a[0], a[1], a[2]});
  return sextic_trace(f, unflatten({a[0], a[1], a[2], a[3], a[4], a[5]}));
}

bool is_ring_lattice(const CubicField& f, int rank, const QLattice& lat) {
  if (lat.rank() != rank) return false;
  QVector one(rank, Rational(0));
  one[0] = 1;
  if (!lat.contains(one)) return false;
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j)
      if (!lat.contains(order_mul(f, rank, lat.row(i), lat.row(j))))
        return false;
  return true;
}

Integer lattice_disc(const CubicField& f, int rank, const QLattice& lat) {
  QMatrix g(rank, QVector(rank, Rational(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = i; j < rank; ++j) {
      g[i][j] = order_trace(f, rank, order_mul(f, rank, lat.row(i), lat.row(j)));
      g[j][i] = g[i][j];
    }
  Rational d = det(g);
  if (!is_integer(d))
    throw std::logic_error("order discriminant is not an integer");
  return d.get_num();
}

OrderBasis make_order(const CubicField& f, int rank, const QLattice& lat) {
  if (!is_ring_lattice(f, rank, lat))
    throw std::invalid_argument("lattice is not a ring containing 1");
  return {rank, lat, lattice_disc(f, rank, lat)};
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (dense, ascending coefficients) for the Dedekind test.
namespace {

using PolyP = std::vector<Integer>;  // mod-p coefficients, trimmed

Integer mod(const Integer& a, const Integer& p) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP reduce_poly(const std::vector<Integer>& coeffs, const Integer& p) {
  PolyP r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.push_back(mod(c, p));
  trim(r);
  return r;
}

Integer inv_mod(const Integer& a, const Integer& p) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
    throw std::logic_error("non-invertible element mod p");
  return r;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  trim(r);
  return r;
}

// Returns (quotient, remainder).
std::pair<PolyP, PolyP> poly_divmod(PolyP a, const PolyP& b, const Integer& p) {
  PolyP q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Integer(0));
  Integer lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    Integer c = mod(a.back() * lead_inv, p);
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

PolyP poly_gcd(PolyP a, PolyP b, const Integer& p) {
  while (!b.empty()) {
    PolyP r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Integer inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mod(c * inv, p);
  }
  return a;
}

PolyP poly_derivative(const PolyP& a, const Integer& p) {
  PolyP r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(mod(Integer(i) * a[i], p));
  trim(r);
  return r;
}

}  // namespace

// Product of the distinct irreducible factors. gcd(f, f') alone is not
// enough in characteristic p: factors with multiplicity divisible by p have
// zero derivative and survive the gcd entirely.
PolyP poly_radical(PolyP fbar, const Integer& p) {
  if (fbar.size() <= 1) return {Integer(1)};
  PolyP fprime = poly_derivative(fbar, p);
  if (fprime.empty()) {
    // fbar = s(x^p) = s*(x)^p with identical coefficients over F_p
    unsigned long pe = p.get_ui();
    PolyP root;
    for (size_t i = 0; i < fbar.size(); i += pe) root.push_back(fbar[i]);
    return poly_radical(std::move(root), p);
  }
  PolyP d = poly_gcd(fbar, fprime, p);
  if (d.size() <= 1) return fbar;  // squarefree
  PolyP w = poly_divmod(fbar, d, p).first;
  // Strip every w-factor from d; what is left is a perfect p-th power.
  while (true) {
    PolyP g = poly_gcd(d, w, p);
    if (g.size() <= 1) break;
    d = poly_divmod(d, g, p).first;
  }
  return poly_mul(w, poly_radical(std::move(d), p), p);
}

bool dedekind_is_p_maximal(const CubicField& f, const Integer& p) {
  // f = prod g_i^e_i mod p; g = radical, h = f/g; T = (lift(g)lift(h) - f)/p;
  // Z[alpha] is p-maximal iff gcd(T, g, h) = 1 mod p.
  std::vector<Integer> fc{f.c0(), f.c1(), f.c2(), Integer(1)};
  PolyP fbar = reduce_poly(fc, p);
  PolyP g = poly_radical(fbar, p);
  if (g.size() == fbar.size()) return true;  // squarefree mod p
  PolyP h = poly_divmod(fbar, g, p).first;
  // Lift g, h with coefficients in [0, p) and form T = (g*h - f)/p over Z.
  std::vector<Integer> gz(g.begin(), g.end()), hz(h.begin(), h.end());
  std::vector<Integer> prod(gz.size() + hz.size() - 1, Integer(0));
  for (size_t i = 0; i < gz.size(); ++i)
    for (size_t j = 0; j < hz.size(); ++j) prod[i + j] += gz[i] * hz[j];
  if (prod.size() < 4) prod.resize(4, Integer(0));
  std::vector<Integer> tz(prod.size());
  for (size_t i = 0; i < prod.size(); ++i) {
    Integer diff = prod[i] - (i < 4 ? fc[i] : Integer(0));
    if (!mpz_divisible_p(diff.get_mpz_t(), p.get_mpz_t()))
      throw std::logic_error("Dedekind: lift mismatch");
    tz[i] = diff / p;
  }
  PolyP t = reduce_poly(tz, p);
  PolyP d = poly_gcd(poly_gcd(t, g, p), h, p);
  return d.size() <= 1;
}

// ---------------------------------------------------------------------------
// Round-2 machinery (generic over rank).
namespace {

// Nullspace basis over F_p of the matrix with rows `rows` (m x n).
std::vector<std::vector<Integer>> nullspace_mod_p(
    std::vector<std::vector<Integer>> m, int ncols, const Integer& p) {
  const int nrows = static_cast<int>(m.size());
  for (auto& row : m)
    for (auto& x : row) x = mod(x, p);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int piv = -1;
    for (int i = r; i < nrows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Integer inv = inv_mod(m[r][c], p);
    for (int j = 0; j < ncols; ++j) m[r][j] = mod(m[r][j] * inv, p);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Integer fct = m[i][c];
      for (int j = 0; j < ncols; ++j) m[i][j] = mod(m[i][j] - fct * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Integer>> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Integer> v(ncols, Integer(0));
    v[fc] = 1;
    for (int ri = 0; ri < static_cast<int>(pivots.size()); ++ri)
      v[pivots[ri]] = mod(-m[ri][fc], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVector lattice_combo(const QLattice& lat, const std::vector<Integer>& c) {
  QVector v(lat.dim(), Rational(0));
  for (int k = 0; k < lat.rank(); ++k) {
    if (c[k] == 0) continue;
    for (int j = 0; j < lat.dim(); ++j) v[j] += Rational(c[k]) * lat.row(k)[j];
  }
  return v;
}

// Coordinates in the order basis reduced mod p (must be integral).
std::vector<Integer> coords_mod_p(const QLattice& lat, const QVector& v,
                                  const Integer& p) {
  auto c = lat.coords(v);
  if (!c) throw std::logic_error("element outside order span");
  std::vector<Integer> out;
  out.reserve(c->size());
  for (const auto& x : *c) {
    if (!is_integer(x)) throw std::logic_error("non-integral order coords");
    out.push_back(mod(x.get_num(), p));
  }
  return out;
}

// p-radical of O as a lattice (contains pO): kernel of x -> x^(p^k) on O/pO.
QLattice p_radical(const CubicField& f, int rank, const QLattice& lat,
                   const Integer& p) {
  Integer q = p;
  while (q < rank) q *= p;
  std::vector<std::vector<Integer>> frob_rows;  // row i = coords of b_i^q
  for (int i = 0; i < rank; ++i) {
    // square-and-multiply in O, reducing coords mod p at each step
    QVector acc;  // empty = 1 not yet multiplied
    QVector base = lat.row(i);
    Integer e = q;
    auto reduce = [&](const QVector& v) {
      return lattice_combo(lat, coords_mod_p(lat, v, p));
    };
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) {
        acc = acc.empty() ? base : reduce(order_mul(f, rank, acc, base));
      }
      e /= 2;
      if (e > 0) base = reduce(order_mul(f, rank, base, base));
    }
    frob_rows.push_back(coords_mod_p(lat, acc, p));
  }
  // kernel over F_p: vectors c with sum c_i * (b_i^q coords) = 0 mod p.
  // Rows of the map matrix are frob_rows (as row vectors); we need the left
  // kernel, i.e. nullspace of the transpose.
  std::vector<std::vector<Integer>> mt(rank, std::vector<Integer>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) mt[i][j] = frob_rows[j][i];
  auto ker = nullspace_mod_p(mt, rank, p);
  QMatrix gens;
  for (const auto& kv : ker) gens.push_back(lattice_combo(lat, kv));
  for (int i = 0; i < rank; ++i) {
    QVector row = lat.row(i);
    for (auto& x : row) x *= p;
    gens.push_back(std::move(row));
  }
  return QLattice(gens);
}

// O' = (1/p) {x in O : x*I subset p*I}; contains O.
QLattice multiplier_ring(const CubicField& f, int rank, const QLattice& lat,
                         const QLattice& radical, const Integer& p) {
  // Condition rows over F_p, unknowns = coords of x in lat's basis.
  std::vector<std::vector<Integer>> cond;
  for (int j = 0; j < radical.rank(); ++j) {
    // coords (in radical basis) of b_i * r_j, for each i
    std::vector<std::vector<Integer>> cols;
    for (int i = 0; i < rank; ++i) {
      QVector prod = order_mul(f, rank, lat.row(i), radical.row(j));
      auto c = radical.coords(prod);
      if (!c) throw std::logic_error("radical not an ideal?");
      std::vector<Integer> ci;
      for (const auto& x : *c) {
        if (!is_integer(x))
          throw std::logic_error("radical multiplication non-integral");
        ci.push_back(mod(x.get_num(), p));
      }
      cols.push_back(std::move(ci));
    }
    for (int k = 0; k < radical.rank(); ++k) {
      std::vector<Integer> row(rank);
      for (int i = 0; i < rank; ++i) row[i] = cols[i][k];
      cond.push_back(std::move(row));
    }
  }
  auto ker = nullspace_mod_p(cond, rank, p);
  QMatrix gens;
  for (const auto& kv : ker) {
    QVector v = lattice_combo(lat, kv);
    for (auto& x : v) x /= p;
    gens.push_back(std::move(v));
  }
  for (int i = 0; i < rank; ++i) gens.push_back(lat.row(i));
  return QLattice(gens);
}

}  // namespace

OrderBasis p_saturate(const CubicField& f, const OrderBasis& o,
                      const Integer& p) {
  QLattice lat = o.lattice;
  while (true) {
    QLattice rad = p_radical(f, o.rank, lat, p);
    QLattice bigger = multiplier_ring(f, o.rank, lat, rad, p);
    if (bigger == lat) break;
    lat = bigger;
  }
  return {o.rank, lat, lattice_disc(f, o.rank, lat)};
}

OrderBasis maximal_order(const CubicField& f) {
  QMatrix id(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i) id[i][i] = 1;
  OrderBasis o{3, QLattice(id), f.poly_disc()};
  for (const auto& [p, e] : factor_integer(f.poly_disc())) {
    if (e < 2) continue;
    if (o.lattice == QLattice(id) && dedekind_is_p_maximal(f, p)) continue;
    o = p_saturate(f, o, p);
  }
  o.disc = lattice_disc(f, 3, o.lattice);
  return o;
}

OrderBasis sextic_order_from_cubic(const CubicField& f,
                                   const OrderBasis& oplus) {
  if (oplus.rank != 3) throw std::invalid_argument("need a rank-3 order");
  QMatrix gens;
  for (int i = 0; i < 3; ++i) {
    const QVector& r = oplus.lattice.row(i);
    gens.push_back({r[0], r[1], r[2], Rational(0), Rational(0), Rational(0)});
    gens.push_back({Rational(0), Rational(0), Rational(0), r[0], r[1], r[2]});
  }
  OrderBasis o = make_order(f, 6, QLattice(gens));
  return p_saturate(f, o, Integer(3));
}

OrderBasis sextic_order_from_rows(const CubicField& f, const QMatrix& rows) {
  return make_order(f, 6, QLattice(rows));
}

OrderBasis z_plus_2O(const CubicField& f, const OrderBasis& o) {
  QMatrix gens;
  QVector one(o.lattice.dim(), Rational(0));
  one[0] = 1;
  gens.push_back(one);
  for (int i = 0; i < o.rank; ++i) {
    QVector r = o.lattice.row(i);
    for (auto& x : r) x *= 2;
    gens.push_back(std::move(r));
  }
  OrderBasis r{o.rank, QLattice(gens), 0};
  if (!is_ring_lattice(f, o.rank, r.lattice))
    throw std::logic_error("Z+2O is not a ring (input not a ring?)");
  r.disc = lattice_disc(f, o.rank, r.lattice);
  return r;
}

OrderBasis real_suborder(const CubicField& f, const OrderBasis& o6) {
  if (o6.rank != 6) throw std::invalid_argument("need a rank-6 order");
  // x in O with zeta3-part zero: left kernel of the projection onto the
  // last three flat coordinates.
  QMatrix proj;
  for (int i = 0; i < 6; ++i) {
    const QVector& r = o6.lattice.row(i);
    proj.push_back({r[3], r[4], r[5]});
  }
  auto ker = integer_left_kernel(proj);
  QMatrix gens;
  for (const auto& kv : ker) {
    QVector v6 = lattice_combo(o6.lattice, kv);
    gens.push_back({v6[0], v6[1], v6[2]});
  }
  return make_order(f, 3, QLattice(gens));
}

std::array<Rational, 6> express_in_power_basis(const CubicField& f,
                                               const SexticElement& w,
                                               const FieldElement& mu) {
  if (CubicField::is_rational(mu))
    throw std::invalid_argument("mu is rational: degenerate power basis");
  FieldElement mu2 = f.mul(mu, mu);
  std::array<FieldElement, 3> pows{CubicField::one(), mu, mu2};
  QMatrix basis;  // row k = flat coords of mu^i zeta^j
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) {
      QVector row(6, Rational(0));
      for (int k = 0; k < 3; ++k) row[3 * j + k] = pows[i][k];
      basis.push_back(std::move(row));
    }
  SexticCoords wc = flatten(w);
  auto sol = solve_left(basis, QVector(wc.begin(), wc.end()));
  if (!sol) throw std::logic_error("power basis is degenerate");
  return {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3], (*sol)[4], (*sol)[5]};
}

}  // namespace picardcm
