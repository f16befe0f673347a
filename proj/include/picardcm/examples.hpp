#ifndef PICARDCM_EXAMPLES_HPP
#define PICARDCM_EXAMPLES_HPP

#include <string>
#include <vector>

#include "picardcm/json_io.hpp"

namespace picardcm {

/// One record of the shipped reference data set (data/examples.json).
struct ExampleRecord {
  int id = 0;
  Integer c0, c1, c2;  // monic cubic x^3 + c2 x^2 + c1 x + c0
  FieldElement mu;
  FactoredNumber expected_n_mu;
  bool has_j = false;
  Rational j1, j2;
  bool has_den_abs = false;
  FactoredNumber den_abs;
  bool has_den_kw = false;
  FactoredNumber den_kw_abs;
  bool has_den_delta = false;
  FactoredNumber den_delta_abs;
  bool has_b = false;
  Integer constant_b;
  std::string approx_digits;  // printed significand digits of B^10/8
  int approx_exp10 = 0;
  bool has_curve = false;
  PicardCurve curve;
  bool has_classpoly = false;
  FactoredNumber den_h_j1, den_h_hat;
};

std::vector<ExampleRecord> load_examples(const std::string& path);

/// True iff v rounds to the printed value digits * 10^(exp10 - len + 1)
/// at the printed precision.
bool matches_printed_approx(const Rational& v, const std::string& digits,
                            int exp10);

/// den_abs and den_kw_abs recomputed from the invariant pair (j1, j2) alone,
/// using j3 = j2^3 / j1 and (kw1, kw2) = (1/j1, j2/j1).
FactoredNumber den_abs_from_j(const Rational& j1, const Rational& j2);
FactoredNumber den_kw_abs_from_j(const Rational& j1, const Rational& j2);

struct ExampleOutcome {
  int id = 0;
  bool pass = true;
  std::vector<std::string> notes;  // one line per failed (or notable) check
  double seconds = 0.0;
};

/// Recomputes everything the record pins down and compares exactly.
ExampleOutcome run_example(const ExampleRecord& rec, int threads = 0);

}  // namespace picardcm

#endif
