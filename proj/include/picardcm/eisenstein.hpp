#ifndef PICARDCM_EISENSTEIN_HPP
#define PICARDCM_EISENSTEIN_HPP

#include <array>

#include "picardcm/numeric.hpp"

namespace picardcm {

/// Element c + d*zeta3 of Q(zeta3), with zeta3^2 = -1 - zeta3.
struct Eisenstein {
  Rational c, d;

  Eisenstein() : c(0), d(0) {}
  Eisenstein(Rational c_, Rational d_ = Rational(0))
      : c(std::move(c_)), d(std::move(d_)) {}

  static Eisenstein zeta() { return {Rational(0), Rational(1)}; }
  /// r1 = 1 + 2*zeta3, a square root of -3.
  static Eisenstein sqrt_minus_three() { return {Rational(1), Rational(2)}; }

  bool operator==(const Eisenstein&) const = default;

  Eisenstein operator+(const Eisenstein& o) const { return {c + o.c, d + o.d}; }
  Eisenstein operator-(const Eisenstein& o) const { return {c - o.c, d - o.d}; }
  Eisenstein operator-() const { return {-c, -d}; }
  Eisenstein operator*(const Eisenstein& o) const {
    return {c * o.c - d * o.d, c * o.d + d * o.c - d * o.d};
  }

  /// zeta3 -> -1 - zeta3.
  Eisenstein conj() const { return {c - d, -d}; }
  /// c^2 - c*d + d^2, multiplicative.
  Rational norm() const { return c * c - c * d + d * d; }

  bool is_rational() const { return d == 0; }
};

/// 3x3 matrix over Q(zeta3); rational matrices are the d == 0 case.
class Matrix3 {
 public:
  Matrix3() = default;

  static Matrix3 identity();
  static Matrix3 scalar(const Eisenstein& s);
  static Matrix3 scalar(const Rational& q) { return scalar(Eisenstein(q)); }

  Eisenstein& at(int r, int c) { return e_[r * 3 + c]; }
  const Eisenstein& at(int r, int c) const { return e_[r * 3 + c]; }

  bool operator==(const Matrix3&) const = default;
  Matrix3 operator+(const Matrix3& o) const;
  Matrix3 operator-(const Matrix3& o) const;
  Matrix3 operator*(const Matrix3& o) const;
  Matrix3 operator*(const Eisenstein& s) const;

  Matrix3 pow(unsigned long k) const;

  Eisenstein trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }
  bool is_zero() const;

 private:
  std::array<Eisenstein, 9> e_{};
};

}  // namespace picardcm

#endif
