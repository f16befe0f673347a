#include "picardcm/eisenstein.hpp"

namespace picardcm {

Matrix3 Matrix3::identity() { return scalar(Eisenstein(Rational(1))); }

Matrix3 Matrix3::scalar(const Eisenstein& s) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m.at(i, i) = s;
  return m;
}

Matrix3 Matrix3::operator+(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix3 Matrix3::operator-(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Eisenstein s;
      for (int k = 0; k < 3; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Matrix3 Matrix3::operator*(const Eisenstein& s) const {
  Matrix3 r;
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] * s;
  return r;
}

Matrix3 Matrix3::pow(unsigned long k) const {
  Matrix3 r = identity();
  Matrix3 b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool Matrix3::is_zero() const {
  for (const auto& x : e_)
    if (!(x == Eisenstein())) return false;
  return true;
}

}  // namespace picardcm
