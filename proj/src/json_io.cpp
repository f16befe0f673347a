#include "picardcm/json_io.hpp"

namespace picardcm {

namespace {

std::string q_str(const Rational& q) { return rational_to_string(q); }

std::string z_str(const Integer& z) { return z.get_str(); }

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p) arr.push_back(q_str(c));
  return arr;
}

}  // namespace

Json factored_to_json(const FactoredNumber& f) {
  Json factors = Json::object();
  for (const auto& [p, e] : f.factors()) factors[z_str(p)] = q_str(e);
  return Json{{"sign", f.sign()}, {"factors", factors}};
}

FactoredNumber factored_from_json(const Json& j) {
  FactoredNumber f;
  if (j.value("sign", 1) < 0) f = f * FactoredNumber::factorize(-1);
  for (const auto& [key, val] : j.at("factors").items())
    f.set_exponent(Integer(key), parse_rational(val.get<std::string>()));
  return f;
}

PicardCurve curve_from_json(const Json& j) {
  return {parse_rational(j.at("a").get<std::string>()),
          parse_rational(j.at("b").get<std::string>()),
          parse_rational(j.at("c").get<std::string>())};
}

Json curve_to_json(const PicardCurve& cu) {
  return Json{{"a", q_str(cu.a)}, {"b", q_str(cu.b)}, {"c", q_str(cu.c)}};
}

std::vector<std::pair<Rational, Rational>> points_from_json(const Json& j) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& pt : j)
    out.emplace_back(parse_rational(pt.at("j1").get<std::string>()),
                     parse_rational(pt.at("j2").get<std::string>()));
  return out;
}

Json invariants_to_json(const InvariantVector& v) {
  Json j;
  j["delta"] = q_str(v.delta);
  if (v.has_j) {
    j["j1"] = q_str(v.j1);
    j["j2"] = q_str(v.j2);
    j["j3"] = q_str(v.j3);
  }
  if (v.has_kw) {
    j["kw1"] = q_str(v.kw1);
    j["kw2"] = q_str(v.kw2);
  }
  if (v.has_i) {
    j["i1"] = q_str(v.i1);
    j["i2"] = q_str(v.i2);
    j["i3"] = q_str(v.i3);
    j["i4"] = q_str(v.i4);
    j["i5"] = q_str(v.i5);
  }
  return j;
}

Json denominators_to_json(const AbsoluteDenominators& d) {
  Json j;
  if (d.has_abs) j["den_abs"] = factored_to_json(d.den_abs);
  if (d.has_kw) j["den_kw_abs"] = factored_to_json(d.den_kw_abs);
  if (d.has_delta) j["den_delta_abs"] = factored_to_json(d.den_delta_abs);
  return j;
}

Json certificate_to_json(const BoundCertificate& cert) {
  Json j;
  j["mu_minpoly"] = {z_str(cert.mu.t1), z_str(cert.mu.a1), z_str(cert.mu.N)};
  j["t2"] = z_str(cert.mu.t2);
  Json tuples = Json::array();
  for (const auto& t : cert.tuples)
    tuples.push_back(Json{{"m", t.m},
                          {"x", z_str(t.x)},
                          {"a", z_str(t.a)},
                          {"n", z_str(t.n)},
                          {"survived", true},
                          {"reason", nullptr}});
  j["tuples"] = tuples;
  j["N_mu"] = factored_to_json(cert.n_mu);
  j["six_N_mu"] = factored_to_json(cert.six_n_mu);
  Json primes = Json::array();
  for (const auto& p : cert.primes) primes.push_back(z_str(p));
  j["prime_set"] = primes;
  j["t2_cubed"] = z_str(cert.mu.t2 * cert.mu.t2 * cert.mu.t2);
  return j;
}

Json verdict_to_json(const ReductionVerdict& r) {
  Json j;
  j["p"] = z_str(r.p);
  switch (r.kind) {
    case ReductionVerdict::Kind::none:
      j["case"] = "none";
      j["reason"] = r.reason;
      break;
    case ReductionVerdict::Kind::case1:
      j["case"] = 1;
      j["a_bar_squared"] = z_str(r.a_bar_squared);
      break;
    case ReductionVerdict::Kind::case2:
      j["case"] = 2;
      break;
    case ReductionVerdict::Kind::case3:
      j["case"] = 3;
      j["a_bar_squared"] = z_str(r.a_bar_squared);
      break;
  }
  j["m0"] = q_str(r.m0);
  Json vals;
  vals["v_a"] = r.va_finite ? Json(r.va) : Json("inf");
  vals["v_b"] = r.vb;
  vals["v_c"] = r.vc_finite ? Json(r.vc) : Json("inf");
  j["valuations"] = vals;
  return j;
}

Json classpoly_to_json(const ClassPolyPair& cp) {
  return Json{{"H1", poly_to_json(cp.h1)},
              {"H2hat", poly_to_json(cp.h2hat)},
              {"den_H1", z_str(cp.den_h1)},
              {"den_H2hat", z_str(cp.den_h2hat)}};
}

Json report_to_json(const VerifyReport& rep) {
  Json j;
  j["pass"] = rep.pass;
  Json off = Json::array();
  for (const auto& p : rep.offending_primes) off.push_back(z_str(p));
  j["offending_primes"] = off;
  Json ratios = Json::array();
  for (const auto& r : rep.ratios)
    ratios.push_back(Json{{"p", z_str(r.p)},
                          {"den_exponent", q_str(r.den_exponent)},
                          {"third_of_N_mu_exponent",
                           q_str(r.third_of_n_mu_exponent)}});
  j["exponent_ratios"] = ratios;
  return j;
}

Json candidates_to_json(const std::vector<MuCandidate>& cands) {
  Json arr = Json::array();
  for (const auto& c : cands)
    arr.push_back(Json{{"mu", {q_str(c.mu[0]), q_str(c.mu[1]), q_str(c.mu[2])}},
                       {"t1", z_str(c.t1)},
                       {"a1", z_str(c.a1)},
                       {"N", z_str(c.n)},
                       {"t2", z_str(c.t2)}});
  return arr;
}

}  // namespace picardcm
