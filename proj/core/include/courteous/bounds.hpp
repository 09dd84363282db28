#pragma once

#include <span>
#include <string>
#include <vector>

#include "courteous/row.hpp"

namespace courteous {

inline constexpr double kPiSquaredOverSix = 1.6449340668482264;

// One verified inequality family: computed values over a grid together with
// the envelope they must stay inside.
struct BoundReport {
  std::string quantity;
  std::vector<double> grid;  // n or p, depending on the check
  std::vector<double> computed;
  std::vector<double> lower;
  std::vector<double> upper;

  bool point_pass(std::size_t i) const;
  bool pass() const;            // every grid point inside its envelope
  double max_violation() const; // largest distance outside [lower, upper]; 0 when pass

  std::string to_json() const;
  std::string to_csv() const;   // two columns: grid point, computed value
};

// sum_{k=1}^{n-1} (H_n - H_k)/(n - k) by direct summation; approaches pi^2/6
// and stays inside [1.408, 1.86] from n = 40 on.
double lemma1_sum(int n);

// Partial sum of the limiting geometric-left occupancy
// T_p = sum_l prod_{k<l} (p + (1-p)/2^k), stopping early once the running
// product drops below 1e-16. Throws for p outside [0, 1): the series has no
// finite limit at p = 1.
double t_p_partial(double p, int terms);

// Linear fit g(p) = 1.6746 - 0.6425 p against (1-p) T_p. The +-0.035 band
// around g and the direct band 1.6396 - 0.6425 p <= (1-p) T_p <= 1.7096 -
// 0.6425 p coincide, so the report carries that one envelope with
// computed = (1-p) T_p.
BoundReport check_g_interpolation(std::span<const double> p_grid);

// (100/383) H_n^2 <= R_n <= (5/7) H_n^2 for the selfish right-bias Zipf row,
// checked for every 40 <= n <= n_max. computed holds the ratio R_n / H_n^2 and
// the envelope the two constants, so the CSV doubles as the ratio trajectory.
BoundReport zipf_right_sandwich(int n_max);

// Courtesy transfer of the sandwich:
//   (4 c1 / 9) H_n^2 / (1 - 0.945 p)  <=  R_n(p)  <=  c2 H_n^2 / (1 - p)
// with c1 = 100/383, c2 = 5/7. (1 - 0.214 c1 = 0.9441..; the denominator uses
// the rounded-up 0.945, which only tightens the lower bound.) Needs n >= 40
// and every grid point in [0, 1).
BoundReport zipf_right_courteous_sandwich(int n, std::span<const double> p_grid);

// Sandwich for the degree-39 polynomial R_40(p) with the printed constants.
double r40_sandwich_lower(double p);  // 2.13 / (1 - 0.945 p)
double r40_sandwich_upper(double p);  // 13 / (1 - p)
BoundReport r40_polynomial_sandwich(std::span<const double> p_grid);

// Closed asymptotic comparison value for the analyzed families:
//   uniform, one entrance:  (H_n + ln(1-p)) / (1-p)
//   uniform, two entrances: 2 ln n at p = 0, else -1/(1-p) + 2 (H_n + ln(1-p))/(1-p)
//   Zipf left bias, one entrance, p = 0: ln ln n
// Anything else throws std::invalid_argument (no closed asymptotic constant).
double asymptotic_estimate(const RowSpec& spec);

}  // namespace courteous
