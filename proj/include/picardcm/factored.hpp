#ifndef PICARDCM_FACTORED_HPP
#define PICARDCM_FACTORED_HPP

#include <map>
#include <vector>

#include "picardcm/numeric.hpp"

namespace picardcm {

bool is_prime(const Integer& n);

/// Prime factorization of |n|, n != 0, as prime -> multiplicity.
std::map<Integer, unsigned long> factor_integer(const Integer& n);

/// A signed product of prime powers with exact rational exponents.
///
/// This is the common output format for N_mu certificates and the
/// absolute-denominator quantities, whose exponents may be fractional
/// (e.g. (2^3*7^2)^(1/2)).
class FactoredNumber {
 public:
  FactoredNumber() = default;

  static FactoredNumber one() { return FactoredNumber(); }
  static FactoredNumber factorize(const Integer& n);

  int sign() const { return sign_; }
  const std::map<Integer, Rational>& factors() const { return factors_; }

  /// Exponent of p (zero if absent).
  Rational exponent(const Integer& p) const;
  void set_exponent(const Integer& p, const Rational& e);

  FactoredNumber operator*(const FactoredNumber& o) const;
  FactoredNumber& operator*=(const FactoredNumber& o);
  bool operator==(const FactoredNumber& o) const = default;

  /// pow with a rational exponent (sign must stay well defined:
  /// negative base requires an exponent with odd denominator).
  FactoredNumber pow(const Rational& e) const;

  /// lcm/pointwise-max of absolute values (sign forced positive).
  static FactoredNumber lcm(const FactoredNumber& a, const FactoredNumber& b);
  static FactoredNumber pointwise_max(const FactoredNumber& a,
                                      const FactoredNumber& b);

  bool is_integral() const;  // all exponents in Z>=0
  Integer to_integer() const;  // requires is_integral()
  Rational to_rational() const;  // requires integer exponents (any sign)
  std::vector<Integer> prime_set() const;

  /// Human form like "-2^3*5*13*47" ("1" for the empty product);
  /// fractional exponents print as p^(r).
  std::string to_string() const;

 private:
  int sign_ = 1;
  std::map<Integer, Rational> factors_;
};

/// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& q, const Integer& p);

}  // namespace picardcm

#endif
