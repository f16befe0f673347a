#include "picardcm/numeric.hpp"

#include <mpfr.h>

namespace picardcm {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::vector<Rational> parse_rational_list(const std::string& s, char sep) {
  std::vector<Rational> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(parse_rational(cur));
  return out;
}

namespace {

// Evaluates f at increasing precision with directed rounding until the
// floor (resp. ceiling) of the lower and upper bound agree.
template <typename F>
Integer certified_round(F eval, bool want_ceiling) {
  for (mpfr_prec_t prec = 96; prec <= 4096; prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    eval(lo, MPFR_RNDD);
    eval(hi, MPFR_RNDU);
    mpz_class zlo, zhi;
    if (want_ceiling) {
      mpfr_get_z(zlo.get_mpz_t(), lo, MPFR_RNDU);
      mpfr_get_z(zhi.get_mpz_t(), hi, MPFR_RNDU);
    } else {
      mpfr_get_z(zlo.get_mpz_t(), lo, MPFR_RNDD);
      mpfr_get_z(zhi.get_mpz_t(), hi, MPFR_RNDD);
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (zlo == zhi) return zlo;
  }
  throw std::runtime_error("certified rounding did not converge");
}

}  // namespace

Integer certified_minkowski_cap(const Integer& d) {
  if (d <= 0) throw std::invalid_argument("discriminant must be positive");
  auto eval = [&](mpfr_t out, mpfr_rnd_t rnd) {
    // 1 + 16/pi * sqrt(d); pi rounded the opposite way (it divides).
    mpfr_rnd_t opp = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
    mpfr_t pi, sq;
    mpfr_init2(pi, mpfr_get_prec(out));
    mpfr_init2(sq, mpfr_get_prec(out));
    mpfr_const_pi(pi, opp);
    mpfr_set_z(sq, d.get_mpz_t(), rnd);
    mpfr_sqrt(sq, sq, rnd);
    mpfr_mul_ui(sq, sq, 16, rnd);
    mpfr_div(sq, sq, pi, rnd);
    mpfr_add_ui(out, sq, 1, rnd);
    mpfr_clear(pi);
    mpfr_clear(sq);
  };
  return certified_round(eval, false);
}

Integer certified_crude_prime_ceiling(const Integer& d) {
  if (d <= 0) throw std::invalid_argument("discriminant must be positive");
  auto eval = [&](mpfr_t out, mpfr_rnd_t rnd) {
    mpfr_t sq;
    mpfr_init2(sq, mpfr_get_prec(out));
    mpfr_set_z(sq, d.get_mpz_t(), rnd);
    mpfr_sqrt(sq, sq, rnd);
    mpfr_mul_z(sq, sq, d.get_mpz_t(), rnd);
    mpfr_mul_ui(out, sq, 196, rnd);
    mpfr_clear(sq);
  };
  return certified_round(eval, true);
}

}  // namespace picardcm
