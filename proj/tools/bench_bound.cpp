#include <chrono>
#include <functional>
#include <iostream>

#include "picardcm/bound_engine.hpp"
#include "picardcm/orders.hpp"

using namespace picardcm;

namespace {

double time_once(const std::function<BoundCertificate()>& fn,
                 BoundCertificate& out) {
  auto start = std::chrono::steady_clock::now();
  out = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void bench(const std::string& label, const Integer& c0, const Integer& c1,
           const Integer& c2, const FieldElement& mu, int threads) {
  CubicField f(c0, c1, c2);
  OrderBasis o6 = sextic_order_from_cubic(f, maximal_order(f));
  BoundCertificate serial, parallel;
  double ts = time_once([&] { return compute_N_mu_serial(f, o6, mu); }, serial);
  double tp = time_once(
      [&] { return compute_N_mu_parallel(f, o6, mu, threads); }, parallel);
  bool same = serial.n_mu == parallel.n_mu &&
              serial.tuples.size() == parallel.tuples.size();
  std::cout << label << ": serial " << ts << " s, parallel(" << threads
            << ") " << tp << " s, speedup " << (tp > 0 ? ts / tp : 0.0)
            << ", outputs " << (same ? "identical" : "DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 4;
  bench("x^3-x^2-2x+1, mu=-2a^2+3", 1, -2, -1,
        {Rational(3), Rational(0), Rational(-2)}, threads);
  bench("x^3-x^2-4x-1, mu=-2a^2+2a+5", -1, -4, -1,
        {Rational(5), Rational(2), Rational(-2)}, threads);
  bench("x^3-21x-28, mu=2a", -28, -21, 0,
        {Rational(0), Rational(2), Rational(0)}, threads);
  return 0;
}
