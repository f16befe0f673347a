#ifndef PICARDCM_LATTICE_HPP
#define PICARDCM_LATTICE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "picardcm/numeric.hpp"

namespace picardcm {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // rows

/// Row-style Hermite normal form over Z (upper triangular, positive pivots,
/// entries above a pivot reduced). Input rows need not be independent;
/// zero rows are dropped.
std::vector<std::vector<Integer>> hnf_rows(
    const std::vector<std::vector<Integer>>& rows);

/// A full-rank lattice in Q^n stored as HNF rows with a common denominator.
/// Canonical: equal lattices have identical storage.
class QLattice {
 public:
  QLattice() = default;
  /// Builds the lattice spanned by the given (possibly dependent) rows.
  explicit QLattice(const QMatrix& generators);

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return rank() == 0 ? 0 : static_cast<int>(rows_[0].size()); }
  const QMatrix& rows() const { return rows_; }
  const QVector& row(int i) const { return rows_[i]; }

  bool operator==(const QLattice& o) const { return rows_ == o.rows_; }

  /// Coordinates of v in the basis, if v lies in the Q-span.
  std::optional<QVector> coords(const QVector& v) const;
  /// Integral membership.
  bool contains(const QVector& v) const;

  /// Index [this : sub] for a full-rank sublattice (det ratio).
  Rational index_of_sublattice(const QLattice& sub) const;

 private:
  QMatrix rows_;  // upper triangular (trapezoidal for rank < dim)
};

/// Solve x * A = b for a square invertible A (rows of A as basis). Returns
/// nullopt if A is singular or b is outside the span.
std::optional<QVector> solve_left(const QMatrix& a, const QVector& b);

/// Basis of the integer (saturated) left kernel {c in Z^m : c*A = 0}.
std::vector<std::vector<Integer>> integer_left_kernel(const QMatrix& a);

Rational det(const QMatrix& a);

}  // namespace picardcm

#endif
