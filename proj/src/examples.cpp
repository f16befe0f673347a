#include "picardcm/examples.hpp"

#include <chrono>
#include <fstream>

namespace picardcm {

std::vector<ExampleRecord> load_examples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open example data: " + path);
  Json doc = Json::parse(in);
  std::vector<ExampleRecord> out;
  for (const auto& j : doc.at("examples")) {
    ExampleRecord r;
    r.id = j.at("id").get<int>();
    r.c0 = Integer(j.at("field_poly")[0].get<std::string>());
    r.c1 = Integer(j.at("field_poly")[1].get<std::string>());
    r.c2 = Integer(j.at("field_poly")[2].get<std::string>());
    for (int i = 0; i < 3; ++i)
      r.mu[i] = parse_rational(j.at("mu")[i].get<std::string>());
    r.expected_n_mu = factored_from_json(j.at("n_mu"));
    if (j.contains("j1")) {
      r.has_j = true;
      r.j1 = parse_rational(j.at("j1").get<std::string>());
      r.j2 = parse_rational(j.at("j2").get<std::string>());
    }
    if (j.contains("den_abs")) {
      r.has_den_abs = true;
      r.den_abs = factored_from_json(j.at("den_abs"));
    }
    if (j.contains("den_kw_abs")) {
      r.has_den_kw = true;
      r.den_kw_abs = factored_from_json(j.at("den_kw_abs"));
    }
    if (j.contains("den_delta_abs")) {
      r.has_den_delta = true;
      r.den_delta_abs = factored_from_json(j.at("den_delta_abs"));
    }
    if (j.contains("constant_b")) {
      r.has_b = true;
      r.constant_b = Integer(j.at("constant_b").get<std::string>());
      r.approx_digits = j.at("eighth_b10_printed").at("digits").get<std::string>();
      r.approx_exp10 = j.at("eighth_b10_printed").at("exp10").get<int>();
    }
    if (j.contains("curve")) {
      r.has_curve = true;
      r.curve = curve_from_json(j.at("curve"));
    }
    if (j.contains("classpoly_dens")) {
      r.has_classpoly = true;
      r.den_h_j1 = factored_from_json(j.at("classpoly_dens").at("den_h_j1"));
      r.den_h_hat = factored_from_json(j.at("classpoly_dens").at("den_h_hat"));
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool matches_printed_approx(const Rational& v, const std::string& digits,
                            int exp10) {
  Integer d(digits);
  int k = static_cast<int>(digits.size());
  // unit = 10^(exp10 - k + 1), the weight of the last printed digit
  Integer ten = 10;
  int shift = exp10 - k + 1;
  Rational unit(1);
  for (int i = 0; i < std::abs(shift); ++i) unit *= ten;
  if (shift < 0) unit = 1 / unit;
  Rational diff = v - Rational(d) * unit;
  if (diff < 0) diff = -diff;
  return 2 * diff <= unit;
}

FactoredNumber den_abs_from_j(const Rational& j1, const Rational& j2) {
  Rational j3 = j2 * j2 * j2 / j1;
  Rational half(1, 2), quarter(1, 4);
  return FactoredNumber::pointwise_max(
      FactoredNumber::factorize(den(j1)).pow(half),
      FactoredNumber::factorize(den(j3)).pow(quarter));
}

FactoredNumber den_kw_abs_from_j(const Rational& j1, const Rational& j2) {
  Rational kw1 = 1 / j1, kw2 = j2 / j1;
  Rational third(1, 3), half(1, 2);
  return FactoredNumber::pointwise_max(
      FactoredNumber::factorize(den(kw1)).pow(third),
      FactoredNumber::factorize(den(kw2)).pow(half));
}

ExampleOutcome run_example(const ExampleRecord& rec, int threads) {
  ExampleOutcome out;
  out.id = rec.id;
  auto start = std::chrono::steady_clock::now();
  auto fail = [&](const std::string& msg) {
    out.pass = false;
    out.notes.push_back(msg);
  };
  try {
    CubicField field(rec.c0, rec.c1, rec.c2);
    OrderBasis oplus = maximal_order(field);
    OrderBasis o6 = sextic_order_from_cubic(field, oplus);
    BoundCertificate cert = compute_N_mu(field, o6, rec.mu, threads);
    if (!(cert.n_mu == rec.expected_n_mu))
      fail("N_mu mismatch: got " + cert.n_mu.to_string() + ", expected " +
           rec.expected_n_mu.to_string());

    std::vector<FactoredNumber> hard_dens;
    if (rec.has_j) {
      FactoredNumber da = den_abs_from_j(rec.j1, rec.j2);
      if (rec.has_den_abs && !(da == rec.den_abs))
        fail("den_abs mismatch: got " + da.to_string() + ", expected " +
             rec.den_abs.to_string());
      FactoredNumber dk = den_kw_abs_from_j(rec.j1, rec.j2);
      if (rec.has_den_kw && !(dk == rec.den_kw_abs))
        fail("den_kw_abs mismatch: got " + dk.to_string() + ", expected " +
             rec.den_kw_abs.to_string());
    }
    if (rec.has_den_abs) hard_dens.push_back(rec.den_abs);
    if (rec.has_curve) {
      InvariantVector iv = invariants(rec.curve);
      if (rec.has_j && (!iv.has_j || iv.j1 != rec.j1 || iv.j2 != rec.j2))
        fail("curve model does not reproduce the stored (j1, j2)");
      AbsoluteDenominators ad = absolute_denominators(rec.curve);
      if (rec.has_den_abs && !(ad.den_abs == rec.den_abs))
        fail("curve den_abs mismatch");
      if (rec.has_den_kw && !(ad.den_kw_abs == rec.den_kw_abs))
        fail("curve den_kw_abs mismatch");
      if (rec.has_den_delta && !(ad.den_delta_abs == rec.den_delta_abs))
        fail("curve den_delta_abs mismatch");
    }
    if (rec.has_classpoly) {
      hard_dens.push_back(rec.den_h_j1);
      hard_dens.push_back(rec.den_h_hat);
    }
    VerifyReport rep = verify_against_certificate(hard_dens, cert);
    if (!rep.pass) {
      std::string primes;
      for (const auto& p : rep.offending_primes)
        primes += (primes.empty() ? "" : ", ") + p.get_str();
      fail("denominator primes not dividing 6*N_mu: " + primes);
    }
    // Bound law: every certified prime is at most max(3, t2^3), and the
    // shortest mu found by the lattice search fits under the Minkowski cap.
    Integer t2_cubed = cert.mu.t2 * cert.mu.t2 * cert.mu.t2;
    Integer limit = t2_cubed < 3 ? Integer(3) : t2_cubed;
    for (const auto& p : cert.primes)
      if (p > limit) fail("prime " + p.get_str() + " exceeds max(3, t2^3)");
    Integer cap = certified_minkowski_cap(abs(oplus.disc));
    auto cands = find_mu(field, oplus);
    if (cands.empty())
      fail("no totally real mu under the Minkowski cap");
    else if (cands.front().t2 > cap)
      fail("minimal t2 exceeds the Minkowski cap");
    if (rec.has_b) {
      Integer b = compute_B(field, o6);
      if (b != rec.constant_b)
        fail("B mismatch: got " + b.get_str() + ", expected " +
             rec.constant_b.get_str());
      Integer b10;
      mpz_pow_ui(b10.get_mpz_t(), b.get_mpz_t(), 10);
      if (!matches_printed_approx(Rational(b10) / 8, rec.approx_digits,
                                  rec.approx_exp10))
        fail("B^10/8 does not match the printed approximation");
    }
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  return out;
}

}  // namespace picardcm
