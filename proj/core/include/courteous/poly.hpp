#pragma once

#include <vector>

namespace courteous {

// Dense polynomial in the courtesy probability p: coefficients[i] multiplies p^i.
struct PolynomialInP {
  std::vector<double> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Largest row size accepted by zipf_right_polynomial. Each step convolves all
// earlier polynomials, so the build is cubic in n.
inline constexpr int kZipfRightPolynomialSeatCap = 200;

// Expected occupancy of the right-bias Zipf row with one entrance as an
// explicit polynomial R_n(p), lifted coefficient-wise from
//   R_k = 1 + p R_{k-1} + ((1-p)/H_k) sum_{j<k} R_j/(k-j).
// Degree is exactly n-1 and every coefficient is positive. Rows larger than
// kZipfRightPolynomialSeatCap are rejected with std::length_error.
PolynomialInP zipf_right_polynomial(int n);

// Horner evaluation.
double eval_polynomial(const PolynomialInP& poly, double p);

}  // namespace courteous
