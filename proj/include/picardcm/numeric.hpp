#ifndef PICARDCM_NUMERIC_HPP
#define PICARDCM_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace picardcm {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer num(const Rational& q) { return q.get_num(); }
inline Integer den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_q(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

/// Integer square root, floor(sqrt(n)), n >= 0.
inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Parse "p/q" or "p" into an exact rational.
Rational parse_rational(const std::string& s);

/// Canonical "p/q" or "p" form.
std::string rational_to_string(const Rational& q);

std::vector<Rational> parse_rational_list(const std::string& s, char sep = ',');

/// floor(1 + (16/pi)*sqrt(d)) for a positive integer d, with the rounding
/// decision certified by interval arithmetic (MPFR directed rounding).
Integer certified_minkowski_cap(const Integer& d);

/// Smallest integer >= 196*d^(3/2), certified.
Integer certified_crude_prime_ceiling(const Integer& d);

}  // namespace picardcm

#endif
