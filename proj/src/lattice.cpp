#include "picardcm/lattice.hpp"

#include <algorithm>

namespace picardcm {

std::vector<std::vector<Integer>> hnf_rows(
    const std::vector<std::vector<Integer>>& rows_in) {
  std::vector<std::vector<Integer>> m = rows_in;
  if (m.empty()) return m;
  const int nrows = static_cast<int>(m.size());
  const int ncols = static_cast<int>(m[0].size());
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
    for (int i = r + 1; i < nrows; ++i) {
      while (m[i][c] != 0) {
        if (abs(m[i][c]) < abs(m[r][c])) std::swap(m[r], m[i]);
        Integer q = floor_div(m[i][c], m[r][c]);
        for (int j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
      }
    }
    if (m[r][c] < 0)
      for (int j = 0; j < ncols; ++j) m[r][j] = -m[r][j];
    for (int i = 0; i < r; ++i) {
      Integer q = floor_div(m[i][c], m[r][c]);
      if (q != 0)
        for (int j = 0; j < ncols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

QLattice::QLattice(const QMatrix& generators) {
  if (generators.empty()) return;
  Integer d = 1;
  for (const auto& row : generators)
    for (const auto& x : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(),
                                      x.get_den().get_mpz_t());
  std::vector<std::vector<Integer>> zrows;
  zrows.reserve(generators.size());
  for (const auto& row : generators) {
    std::vector<Integer> zr;
    zr.reserve(row.size());
    for (const auto& x : row) {
      Rational s = x * Rational(d);
      zr.push_back(s.get_num());
    }
    zrows.push_back(std::move(zr));
  }
  auto h = hnf_rows(zrows);
  rows_.reserve(h.size());
  for (const auto& zr : h) {
    QVector qr;
    qr.reserve(zr.size());
    for (const auto& z : zr) qr.push_back(Rational(z) / Rational(d));
    rows_.push_back(std::move(qr));
  }
}

std::optional<QVector> QLattice::coords(const QVector& v) const {
  // rows_ is trapezoidal: solve by forward substitution over pivot columns.
  QVector rem = v;
  const int n = dim();
  QVector out(rank(), Rational(0));
  int row = 0;
  for (int c = 0; c < n && row < rank(); ++c) {
    if (rows_[row][c] == 0) continue;
    Rational q = rem[c] / rows_[row][c];
    out[row] = q;
    if (q != 0)
      for (int j = c; j < n; ++j) rem[j] -= q * rows_[row][j];
    ++row;
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return out;
}

bool QLattice::contains(const QVector& v) const {
  auto c = coords(v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

Rational QLattice::index_of_sublattice(const QLattice& sub) const {
  if (sub.rank() != rank()) throw std::invalid_argument("rank mismatch");
  Rational d1 = 1, d2 = 1;
  // Products of pivot entries (both trapezoidal with same pivot columns for
  // full-rank sublattices of the same span).
  int row = 0;
  for (int c = 0; c < dim() && row < rank(); ++c) {
    if (rows_[row][c] == 0) continue;
    d1 *= rows_[row][c];
    ++row;
  }
  row = 0;
  for (int c = 0; c < sub.dim() && row < sub.rank(); ++c) {
    if (sub.rows_[row][c] == 0) continue;
    d2 *= sub.rows_[row][c];
    ++row;
  }
  return d2 / d1;
}

std::optional<QVector> solve_left(const QMatrix& a, const QVector& b) {
  // x * A = b  <=>  A^T x^T = b^T; Gaussian elimination on [A^T | b^T].
  const int n = static_cast<int>(a.size());
  if (n == 0 || static_cast<int>(a[0].size()) != n)
    throw std::invalid_argument("solve_left: need square matrix");
  QMatrix m(n, QVector(n + 1, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[j][i];
    m[i][n] = b[i];
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[c], m[piv]);
    Rational inv = 1 / m[c][c];
    for (int j = c; j <= n; ++j) m[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  QVector x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

std::vector<std::vector<Integer>> integer_left_kernel(const QMatrix& a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return {};
  const int n = static_cast<int>(a[0].size());
  // Scale to integers (does not change the kernel), augment with identity,
  // and reduce the left block; rows with zero left block yield the kernel.
  Integer d = 1;
  for (const auto& row : a)
    for (const auto& x : row)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<std::vector<Integer>> w(m, std::vector<Integer>(n + m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rational(a[i][j] * d).get_num();
    w[i][n + i] = 1;
  }
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (w[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[r], w[piv]);
    for (int i = r + 1; i < m; ++i) {
      while (w[i][c] != 0) {
        if (abs(w[i][c]) < abs(w[r][c])) std::swap(w[r], w[i]);
        Integer q = floor_div(w[i][c], w[r][c]);
        for (int j = 0; j < n + m; ++j) w[i][j] -= q * w[r][j];
      }
    }
    ++r;
  }
  std::vector<std::vector<Integer>> ker;
  for (int i = r; i < m; ++i)
    ker.emplace_back(w[i].begin() + n, w[i].end());
  return ker;
}

Rational det(const QMatrix& a) {
  const int n = static_cast<int>(a.size());
  QMatrix m = a;
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(m[c], m[piv]);
      d = -d;
    }
    d *= m[c][c];
    Rational inv = 1 / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

}  // namespace picardcm
