#include "courteous/poly.hpp"

#include <stdexcept>
#include <string>

namespace courteous {

PolynomialInP zipf_right_polynomial(int n) {
  if (n < 1) {
    throw std::invalid_argument("zipf_right_polynomial: n must be >= 1");
  }
  if (n > kZipfRightPolynomialSeatCap) {
    throw std::length_error("zipf_right_polynomial: the coefficient build is cubic; the cap is " +
                            std::to_string(kZipfRightPolynomialSeatCap) + " seats, got " +
                            std::to_string(n));
  }
  // polys[k] holds R_k; R_0 is the zero polynomial.
  std::vector<std::vector<double>> polys(static_cast<std::size_t>(n) + 1);
  double h = 0.0;
  for (int k = 1; k <= n; ++k) {
    h += 1.0 / k;
    // conv = sum_{j=1}^{k-1} R_j/(k-j), degree k-2. Dividing term by term keeps
    // the constant coefficients bit-identical to the plain value recurrence.
    std::vector<double> conv(k > 1 ? static_cast<std::size_t>(k) - 1 : 0, 0.0);
    for (int j = 1; j < k; ++j) {
      const auto& rj = polys[j];
      for (std::size_t i = 0; i < rj.size(); ++i) conv[i] += rj[i] / (k - j);
    }
    std::vector<double> out(static_cast<std::size_t>(k), 0.0);  // degree k-1
    out[0] = 1.0;
    const auto& prev = polys[k - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) out[i + 1] += prev[i];  // p R_{k-1}
    for (std::size_t i = 0; i < conv.size(); ++i) {                       // (1-p) conv / H_k
      out[i] += conv[i] / h;
      out[i + 1] -= conv[i] / h;
    }
    polys[k] = std::move(out);
  }
  return PolynomialInP{std::move(polys[n])};
}

double eval_polynomial(const PolynomialInP& poly, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("eval_polynomial: p must lie in [0, 1]");
  }
  double acc = 0.0;
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) {
    acc = acc * p + *it;
  }
  return acc;
}

}  // namespace courteous
