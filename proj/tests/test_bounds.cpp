#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "courteous/bounds.hpp"
#include "courteous/exact.hpp"
#include "courteous/harmonic.hpp"

using namespace courteous;

namespace {

std::vector<double> p_grid(double start, double stop, double step) {
  std::vector<double> grid;
  for (double p = start; p <= stop + 1e-12; p += step) grid.push_back(p);
  return grid;
}

}  // namespace

TEST_CASE("lemma1_sum: pinned endpoints") {
  CHECK(lemma1_sum(2) == 0.5);  // single term (H_2 - H_1)/1
  CHECK(lemma1_sum(40) == doctest::Approx(1.5132803870335259).epsilon(1e-12));
  CHECK_THROWS_AS(lemma1_sum(1), std::invalid_argument);
}

TEST_CASE("lemma1_sum: the [1.408, 1.86] window from n = 40") {
  for (int n : {40, 41, 64, 100, 1000, 10000}) {
    const double value = lemma1_sum(n);
    CHECK(value >= 1.408);
    CHECK(value <= 1.86);
  }
}

TEST_CASE("lemma1_sum: converges towards pi^2/6") {
  const double at_1e5 = lemma1_sum(100000);
  const double at_1e3 = lemma1_sum(1000);
  CHECK(std::abs(at_1e5 - kPiSquaredOverSix) < 5e-3);
  CHECK(std::abs(at_1e5 - kPiSquaredOverSix) < std::abs(at_1e3 - kPiSquaredOverSix));
}

TEST_CASE("t_p_partial: limit constant at p = 0 and input guards") {
  CHECK(t_p_partial(0.0, 400) == doctest::Approx(1.64163).epsilon(1e-3));
  // frozen direct-summation value
  CHECK(t_p_partial(0.0, 400) == doctest::Approx(1.6416325606551538).epsilon(1e-12));
  CHECK_THROWS_AS(t_p_partial(1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(t_p_partial(0.5, 0), std::invalid_argument);
}

TEST_CASE("check_g_interpolation: the 0.035 band holds on the 0.05 grid") {
  const auto grid = p_grid(0.0, 0.95, 0.05);
  const BoundReport report = check_g_interpolation(grid);
  REQUIRE(report.grid.size() == 20);
  CHECK(report.pass());
  CHECK(report.max_violation() == 0.0);
  // the fit gap at p = 0 is 0.03297, just inside the band
  CHECK(std::abs((1.6746 - 0.6425 * 0.0) - report.computed[0]) ==
        doctest::Approx(0.03297).epsilon(1e-3));
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    const double p = report.grid[i];
    const double tp = t_p_partial(p, 100000);
    CHECK(std::abs((1.6746 - 0.6425 * p) - (1.0 - p) * tp) <= 0.035);
    CHECK(tp >= (1.6396 - 0.6425 * p) / (1.0 - p));
    CHECK(tp <= (1.7096 - 0.6425 * p) / (1.0 - p));
  }
}

TEST_CASE("zipf_right_sandwich: ratio trajectory inside [100/383, 5/7]") {
  const BoundReport report = zipf_right_sandwich(2000);
  REQUIRE(report.grid.size() == 2000 - 40 + 1);
  CHECK(report.pass());
  CHECK(report.computed.front() == doctest::Approx(0.430593).epsilon(1e-4));
  CHECK_THROWS_AS(zipf_right_sandwich(39), std::invalid_argument);
}

TEST_CASE("zipf_right_courteous_sandwich: n = 40 and n = 100") {
  const auto grid = p_grid(0.0, 0.9, 0.1);
  for (int n : {40, 100}) {
    const BoundReport report = zipf_right_courteous_sandwich(n, grid);
    CHECK(report.pass());
  }
  const auto high = p_grid(0.0, 0.99, 0.01);
  CHECK(zipf_right_courteous_sandwich(40, high).pass());
  CHECK_THROWS_AS(zipf_right_courteous_sandwich(39, grid), std::invalid_argument);
  const std::vector<double> bad = {1.0};
  CHECK_THROWS_AS(zipf_right_courteous_sandwich(40, bad), std::invalid_argument);
}

TEST_CASE("r40_polynomial_sandwich: printed constants") {
  CHECK(r40_sandwich_lower(0.0) == 2.13);
  CHECK(r40_sandwich_upper(0.0) == 13.0);
  const auto grid = p_grid(0.0, 0.99, 0.01);
  const BoundReport report = r40_polynomial_sandwich(grid);
  REQUIRE(report.grid.size() == 100);
  CHECK(report.pass());
  CHECK(report.computed[0] == doctest::Approx(7.8824).epsilon(1.3e-4));
}

TEST_CASE("asymptotic_estimate: analyzed families") {
  CHECK(asymptotic_estimate({100, Entrances::OneLeft, SeatDistribution::Uniform, 0.0}) ==
        doctest::Approx(5.187).epsilon(1e-3));
  CHECK(asymptotic_estimate({100, Entrances::Two, SeatDistribution::Uniform, 0.0}) ==
        doctest::Approx(2.0 * std::log(100.0)).epsilon(1e-12));
  CHECK(asymptotic_estimate({1000000, Entrances::OneLeft, SeatDistribution::ZipfLeft, 0.0}) ==
        doctest::Approx(2.6258).epsilon(1e-3));
}

TEST_CASE("asymptotic_estimate: tracks the exact tables at n = 10^4") {
  for (double p : {0.0, 0.3, 0.6, 0.9}) {
    const double exact_one = closed_uniform_one(10000, p);
    const double est_one =
        asymptotic_estimate({10000, Entrances::OneLeft, SeatDistribution::Uniform, p});
    CHECK(std::abs(exact_one - est_one) / exact_one <= 0.05);
    const double exact_two = closed_uniform_two(10000, p);
    const double est_two =
        asymptotic_estimate({10000, Entrances::Two, SeatDistribution::Uniform, p});
    CHECK(std::abs(exact_two - est_two) / exact_two <= 0.05);
  }
}

TEST_CASE("asymptotic_estimate: unsupported requests throw") {
  CHECK_THROWS_AS(
      asymptotic_estimate({100, Entrances::OneLeft, SeatDistribution::GeometricLeft, 0.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      asymptotic_estimate({100, Entrances::OneLeft, SeatDistribution::ZipfLeft, 0.5}),
      std::invalid_argument);
  CHECK_THROWS_AS(asymptotic_estimate({100, Entrances::OneLeft, SeatDistribution::Uniform, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("BoundReport: verdict bookkeeping and serialization") {
  BoundReport report;
  report.quantity = "toy";
  report.grid = {1.0, 2.0};
  report.computed = {0.5, 3.0};
  report.lower = {0.0, 0.0};
  report.upper = {1.0, 1.0};
  CHECK(report.point_pass(0));
  CHECK_FALSE(report.point_pass(1));
  CHECK_FALSE(report.pass());
  CHECK(report.max_violation() == doctest::Approx(2.0));
  const std::string json = report.to_json();
  CHECK(json.find("\"pass\":false") != std::string::npos);
  const std::string csv = report.to_csv();
  CHECK(csv.rfind("grid,value\n", 0) == 0);
  CHECK(csv.find("\n2,3\n") != std::string::npos);
}
