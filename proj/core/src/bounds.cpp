#include "courteous/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "courteous/exact.hpp"
#include "courteous/harmonic.hpp"
#include "courteous/poly.hpp"

namespace courteous {

bool BoundReport::point_pass(std::size_t i) const {
  return lower[i] <= computed[i] && computed[i] <= upper[i];
}

bool BoundReport::pass() const {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!point_pass(i)) return false;
  }
  return true;
}

double BoundReport::max_violation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, lower[i] - computed[i]);
    worst = std::max(worst, computed[i] - upper[i]);
  }
  return std::max(worst, 0.0);
}

std::string BoundReport::to_json() const {
  nlohmann::json j;
  j["quantity"] = quantity;
  j["grid"] = grid;
  j["computed"] = computed;
  j["lower"] = lower;
  j["upper"] = upper;
  std::vector<bool> verdicts(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) verdicts[i] = point_pass(i);
  j["point_pass"] = verdicts;
  j["pass"] = pass();
  j["max_violation"] = max_violation();
  return j.dump();
}

std::string BoundReport::to_csv() const {
  std::string out = "grid,value\n";
  char line[64];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(line, sizeof line, "%.12g,%.12g\n", grid[i], computed[i]);
    out += line;
  }
  return out;
}

double lemma1_sum(int n) {
  if (n < 2) {
    throw std::invalid_argument("lemma1_sum: n must be >= 2");
  }
  const auto h = harmonic_prefix(static_cast<std::size_t>(n));
  const double hn = h[static_cast<std::size_t>(n)];
  double sum = 0.0;
  for (int k = 1; k < n; ++k) {
    sum += (hn - h[static_cast<std::size_t>(k)]) / (n - k);
  }
  return sum;
}

double t_p_partial(double p, int terms) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("t_p_partial: p must lie in [0, 1); the series is unbounded at p = 1");
  }
  if (terms < 1) {
    throw std::invalid_argument("t_p_partial: terms must be >= 1");
  }
  double sum = 0.0;
  double product = 1.0;
  for (int l = 1; l <= terms; ++l) {
    sum += product;
    product *= p + (1.0 - p) * std::ldexp(1.0, -l);
    if (product < 1e-16) break;
  }
  return sum;
}

BoundReport check_g_interpolation(std::span<const double> p_grid) {
  BoundReport report;
  report.quantity = "(1-p) T_p vs g(p) = 1.6746 - 0.6425 p";
  for (double p : p_grid) {
    const double tp = t_p_partial(p, 100000);
    report.grid.push_back(p);
    report.computed.push_back((1.0 - p) * tp);
    report.lower.push_back(1.6396 - 0.6425 * p);
    report.upper.push_back(1.7096 - 0.6425 * p);
  }
  return report;
}

BoundReport zipf_right_sandwich(int n_max) {
  if (n_max < 40) {
    throw std::invalid_argument("zipf_right_sandwich: n_max must be >= 40");
  }
  const ExpectationTable table = zipf_right_selfish(n_max);
  BoundReport report;
  report.quantity = "R_n / H_n^2, selfish zipf right bias";
  for (int n = 40; n <= n_max; ++n) {
    const double hn = harmonic(static_cast<std::size_t>(n));
    report.grid.push_back(n);
    report.computed.push_back(table.value(n) / (hn * hn));
    report.lower.push_back(100.0 / 383.0);
    report.upper.push_back(5.0 / 7.0);
  }
  return report;
}

BoundReport zipf_right_courteous_sandwich(int n, std::span<const double> p_grid) {
  if (n < 40) {
    throw std::invalid_argument("zipf_right_courteous_sandwich: n must be >= 40");
  }
  const double c1 = 100.0 / 383.0;
  const double c2 = 5.0 / 7.0;
  const double hn = harmonic(static_cast<std::size_t>(n));
  const double hn2 = hn * hn;
  BoundReport report;
  report.quantity = "R_n(p), courteous zipf right bias, n = " + std::to_string(n);
  for (double p : p_grid) {
    if (!(p >= 0.0 && p < 1.0)) {
      throw std::invalid_argument("zipf_right_courteous_sandwich: grid points must lie in [0, 1)");
    }
    report.grid.push_back(p);
    report.computed.push_back(zipf_right_courteous(n, p).value(n));
    report.lower.push_back((4.0 * c1 / 9.0) * hn2 / (1.0 - 0.945 * p));
    report.upper.push_back(c2 * hn2 / (1.0 - p));
  }
  return report;
}

double r40_sandwich_lower(double p) { return 2.13 / (1.0 - 0.945 * p); }

double r40_sandwich_upper(double p) { return 13.0 / (1.0 - p); }

BoundReport r40_polynomial_sandwich(std::span<const double> p_grid) {
  const PolynomialInP r40 = zipf_right_polynomial(40);
  BoundReport report;
  report.quantity = "R_40(p) polynomial vs 2.13/(1-0.945p) and 13/(1-p)";
  for (double p : p_grid) {
    if (!(p >= 0.0 && p < 1.0)) {
      throw std::invalid_argument("r40_polynomial_sandwich: grid points must lie in [0, 1)");
    }
    report.grid.push_back(p);
    report.computed.push_back(eval_polynomial(r40, p));
    report.lower.push_back(r40_sandwich_lower(p));
    report.upper.push_back(r40_sandwich_upper(p));
  }
  return report;
}

double asymptotic_estimate(const RowSpec& spec) {
  spec.validate();
  const double p = spec.courtesy;
  if (p >= 1.0) {
    throw std::invalid_argument("asymptotic_estimate: defined for p < 1 only");
  }
  const double n = spec.seats;
  if (spec.distribution == SeatDistribution::Uniform) {
    const double hn = harmonic(static_cast<std::size_t>(spec.seats));
    const double one = (hn + std::log1p(-p)) / (1.0 - p);
    if (spec.entrances == Entrances::OneLeft) return one;
    if (p == 0.0) return 2.0 * std::log(n);
    return -1.0 / (1.0 - p) + 2.0 * one;
  }
  if (spec.distribution == SeatDistribution::ZipfLeft && spec.entrances == Entrances::OneLeft) {
    if (p != 0.0) {
      throw std::invalid_argument(
          "asymptotic_estimate: the courteous left-bias Zipf constant is not known in closed form");
    }
    if (spec.seats < 2) {
      throw std::invalid_argument("asymptotic_estimate: ln ln n needs n >= 2");
    }
    return std::log(std::log(n));
  }
  throw std::invalid_argument("asymptotic_estimate: no closed asymptotic form for " +
                              std::string(to_string(spec.distribution)) + " with " +
                              std::string(to_string(spec.entrances)) + " entrance(s)");
}

}  // namespace courteous
