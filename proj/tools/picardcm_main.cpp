#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "picardcm/examples.hpp"

using namespace picardcm;

namespace {

CubicField field_from_option(const std::string& coeffs) {
  auto v = parse_rational_list(coeffs);
  if (v.size() != 3 || !is_integer(v[0]) || !is_integer(v[1]) ||
      !is_integer(v[2]))
    throw std::invalid_argument(
        "--field-poly needs three integers c0,c1,c2 for x^3+c2x^2+c1x+c0");
  return CubicField(num(v[0]), num(v[1]), num(v[2]));
}

FieldElement mu_from_option(const std::string& coords) {
  auto v = parse_rational_list(coords);
  if (v.size() != 3)
    throw std::invalid_argument("--mu needs three rationals q0,q1,q2");
  return {v[0], v[1], v[2]};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return Json::parse(in);
}

OrderBasis order_from_file(const CubicField& f, const std::string& path) {
  Json j = read_json_file(path);
  QMatrix rows;
  for (const auto& row : j.at("basis")) {
    QVector r;
    for (const auto& x : row) r.push_back(parse_rational(x.get<std::string>()));
    if (r.size() != 6)
      throw std::invalid_argument("order basis rows must have 6 entries");
    rows.push_back(std::move(r));
  }
  if (rows.size() != 6)
    throw std::invalid_argument("order basis must have 6 rows");
  return sextic_order_from_rows(f, rows);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string field_poly, mu, order_basis, curve_file, points_file, data_file;
  std::string ids;
  std::string cap, prime;
  int parallel = 0;
  bool json_out = false;
  bool alt_isogeny = false;
};

int cmd_bound(const Options& opt) {
  if (opt.alt_isogeny) {
    std::cerr << "--alt-isogeny: not implemented\n";
    return 2;
  }
  CubicField f = field_from_option(opt.field_poly);
  FieldElement mu = mu_from_option(opt.mu);
  OrderBasis o6 = opt.order_basis.empty()
                      ? sextic_order_from_cubic(f, maximal_order(f))
                      : order_from_file(f, opt.order_basis);
  BoundCertificate cert = compute_N_mu(f, o6, mu, opt.parallel);
  if (opt.json_out) {
    emit(certificate_to_json(cert));
  } else {
    std::cout << "t2 = " << cert.mu.t2.get_str() << "\n"
              << "N_mu = " << cert.n_mu.to_string() << "\n"
              << "6*N_mu = " << cert.six_n_mu.to_string() << "\n"
              << "primes:";
    for (const auto& p : cert.primes) std::cout << ' ' << p.get_str();
    std::cout << "\n";
  }
  return 0;
}

int cmd_find_mu(const Options& opt) {
  CubicField f = field_from_option(opt.field_poly);
  OrderBasis oplus = maximal_order(f);
  std::optional<Integer> cap;
  if (!opt.cap.empty()) cap = Integer(opt.cap);
  auto cands = find_mu(f, oplus, cap);
  if (opt.json_out) {
    emit(candidates_to_json(cands));
  } else {
    std::cout << "t2\tmu (q0, q1, q2)\tminpoly (t1, a1, N)\n";
    for (const auto& c : cands)
      std::cout << c.t2.get_str() << "\t(" << rational_to_string(c.mu[0])
                << ", " << rational_to_string(c.mu[1]) << ", "
                << rational_to_string(c.mu[2]) << ")\t(" << c.t1.get_str()
                << ", " << c.a1.get_str() << ", " << c.n.get_str() << ")\n";
  }
  return 0;
}

int cmd_invariants(const Options& opt) {
  PicardCurve cu = curve_from_json(read_json_file(opt.curve_file));
  if (discriminant(cu) == 0)
    throw std::invalid_argument("singular curve (discriminant zero)");
  Json j = invariants_to_json(invariants(cu));
  Json d = denominators_to_json(absolute_denominators(cu));
  j.update(d);
  emit(j);
  return 0;
}

int cmd_classify(const Options& opt) {
  PicardCurve cu = curve_from_json(read_json_file(opt.curve_file));
  emit(verdict_to_json(classify_reduction(cu, Integer(opt.prime))));
  return 0;
}

int cmd_classpoly(const Options& opt) {
  auto points = points_from_json(read_json_file(opt.points_file));
  emit(classpoly_to_json(class_polynomials(points)));
  return 0;
}

int cmd_constant_b(const Options& opt) {
  CubicField f = field_from_option(opt.field_poly);
  OrderBasis o6 = sextic_order_from_cubic(f, maximal_order(f));
  Integer b = compute_B(f, o6);
  if (opt.json_out)
    emit(Json{{"B", b.get_str()}});
  else
    std::cout << "B = " << b.get_str() << "\n";
  return 0;
}

int cmd_verify_examples(const Options& opt) {
  auto records = load_examples(opt.data_file);
  std::vector<int> ids;
  if (!opt.ids.empty())
    for (const auto& q : parse_rational_list(opt.ids))
      ids.push_back(static_cast<int>(num(q).get_si()));
  bool all_pass = true;
  for (const auto& rec : records) {
    if (!ids.empty() &&
        std::find(ids.begin(), ids.end(), rec.id) == ids.end())
      continue;
    ExampleOutcome out = run_example(rec, opt.parallel);
    std::cout << "example " << out.id << ": "
              << (out.pass ? "pass" : "FAIL") << " (" << out.seconds
              << " s)\n";
    for (const auto& note : out.notes) std::cout << "  " << note << "\n";
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified denominator bounds for CM Picard curves"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json_out, "JSON output");
    sub->add_option("--parallel", opt.parallel, "worker thread count");
  };

  auto* bound = app.add_subcommand("bound", "compute the N_mu certificate");
  bound->add_option("--field-poly", opt.field_poly, "c0,c1,c2")->required();
  bound->add_option("--mu", opt.mu, "q0,q1,q2")->required();
  bound->add_option("--order-basis", opt.order_basis,
                    "JSON file with a rank-6 order basis");
  bound->add_flag("--alt-isogeny", opt.alt_isogeny,
                  "reserved; alternative isogeny variant");
  add_common(bound);

  auto* findmu = app.add_subcommand("find-mu", "short totally real mu");
  findmu->add_option("--field-poly", opt.field_poly, "c0,c1,c2")->required();
  findmu->add_option("--cap", opt.cap, "override the t2 cap");
  add_common(findmu);

  auto* inv = app.add_subcommand("invariants", "curve invariants");
  inv->add_option("--curve", opt.curve_file, "curve JSON file")->required();
  add_common(inv);

  auto* cls = app.add_subcommand("classify", "reduction type at p");
  cls->add_option("--curve", opt.curve_file, "curve JSON file")->required();
  cls->add_option("--prime", opt.prime, "prime p, coprime to 6")->required();
  add_common(cls);

  auto* cpoly = app.add_subcommand("classpoly", "class polynomials");
  cpoly->add_option("--points", opt.points_file, "JSON list of {j1, j2}")
      ->required();
  add_common(cpoly);

  auto* cb = app.add_subcommand("constant-B", "trace-form constant B");
  cb->add_option("--field-poly", opt.field_poly, "c0,c1,c2")->required();
  add_common(cb);

  auto* ver = app.add_subcommand("verify-examples", "recompute reference data");
  ver->add_option("--ids", opt.ids, "comma-separated example ids");
  ver->add_option("--data", opt.data_file, "example data file")
      ->default_val("data/examples.json");
  add_common(ver);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) return cmd_bound(opt);
    if (findmu->parsed()) return cmd_find_mu(opt);
    if (inv->parsed()) return cmd_invariants(opt);
    if (cls->parsed()) return cmd_classify(opt);
    if (cpoly->parsed()) return cmd_classpoly(opt);
    if (cb->parsed()) return cmd_constant_b(opt);
    if (ver->parsed()) return cmd_verify_examples(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
