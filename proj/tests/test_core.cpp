#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "courteous/harmonic.hpp"
#include "courteous/rng.hpp"
#include "courteous/row.hpp"

using namespace courteous;

TEST_CASE("harmonic: small exact values") {
  CHECK(harmonic(1) == 1.0);
  CHECK(harmonic(2) == 1.5);
  CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  // frozen forward-summation value
  CHECK(harmonic(40) == doctest::Approx(4.278543038936376).epsilon(1e-15));
}

TEST_CASE("harmonic: rejects n = 0") {
  CHECK_THROWS_AS(harmonic(0), std::domain_error);
}

TEST_CASE("harmonic: difference and growth properties") {
  double prev = harmonic(1);
  for (std::size_t k = 2; k <= 4000; ++k) {
    const double cur = harmonic(k);
    CHECK(cur > prev);
    CHECK(cur - prev == doctest::Approx(1.0 / static_cast<double>(k)).epsilon(1e-12));
    prev = cur;
  }
}

TEST_CASE("harmonic: asymptotic expansion band") {
  for (std::size_t n : {10, 50, 100, 1000, 10000, 100000}) {
    const double expansion =
        std::log(static_cast<double>(n)) + kEulerGamma + 1.0 / (2.0 * static_cast<double>(n));
    CHECK(std::abs(harmonic(n) - expansion) <=
          1.0 / (8.0 * static_cast<double>(n) * static_cast<double>(n)));
  }
}

TEST_CASE("harmonic: doubling gap brackets ln 2") {
  for (std::size_t n : {2, 3, 10, 100, 5000}) {
    const double gap = harmonic(2 * n) - harmonic(n);
    const double half = 1.0 / (2.0 * static_cast<double>(n));
    CHECK(gap >= std::log(2.0) - half);
    CHECK(gap <= std::log(2.0) + half);
  }
}

TEST_CASE("HarmonicCache: grow-only prefix view") {
  HarmonicCache cache;
  CHECK(cache.at(5) == doctest::Approx(137.0 / 60.0).epsilon(1e-15));
  const auto view = cache.prefix(10);
  CHECK(view.size() == 11);
  CHECK(view[0] == 0.0);
  CHECK(view[1] == 1.0);
  CHECK(view[10] == doctest::Approx(7381.0 / 2520.0).epsilon(1e-15));
  CHECK(cache.size() == 10);
}

TEST_CASE("seat_pmf: pinned small vectors") {
  const auto uniform = seat_pmf(SeatDistribution::Uniform, 4);
  for (double v : uniform) CHECK(v == 0.25);

  const auto geo_left = seat_pmf(SeatDistribution::GeometricLeft, 3);
  CHECK(geo_left == std::vector<double>{0.5, 0.25, 0.25});

  const auto geo_right = seat_pmf(SeatDistribution::GeometricRight, 3);
  CHECK(geo_right == std::vector<double>{0.25, 0.25, 0.5});

  const auto zipf_left = seat_pmf(SeatDistribution::ZipfLeft, 2);
  CHECK(zipf_left[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(zipf_left[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const auto zipf_right = seat_pmf(SeatDistribution::ZipfRight, 2);
  CHECK(zipf_right[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(zipf_right[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("seat_pmf: sums to one for every law and size") {
  for (auto dist : {SeatDistribution::Uniform, SeatDistribution::GeometricLeft,
                    SeatDistribution::GeometricRight, SeatDistribution::ZipfLeft,
                    SeatDistribution::ZipfRight}) {
    for (int n = 1; n <= 1000; ++n) {
      const auto pmf = seat_pmf(dist, n);
      double sum = 0.0;
      for (double v : pmf) {
        CHECK(v > 0.0);
        sum += v;
      }
      REQUIRE(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("seat_pmf: rejects n = 0") {
  CHECK_THROWS_AS(seat_pmf(SeatDistribution::Uniform, 0), std::invalid_argument);
}

TEST_CASE("RowSpec: validation") {
  RowSpec good{5, Entrances::Two, SeatDistribution::Uniform, 0.5};
  CHECK_NOTHROW(good.validate());
  CHECK_THROWS_AS((RowSpec{0, Entrances::OneLeft, SeatDistribution::Uniform, 0.0}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((RowSpec{3, Entrances::OneLeft, SeatDistribution::Uniform, -0.1}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((RowSpec{3, Entrances::OneLeft, SeatDistribution::Uniform, 1.1}.validate()),
                  std::invalid_argument);
  CHECK(exact_supports(SeatDistribution::Uniform, Entrances::Two));
  CHECK(exact_supports(SeatDistribution::ZipfRight, Entrances::OneLeft));
  CHECK_FALSE(exact_supports(SeatDistribution::GeometricLeft, Entrances::Two));
}

TEST_CASE("distribution and entrance names round-trip") {
  for (auto dist : {SeatDistribution::Uniform, SeatDistribution::GeometricLeft,
                    SeatDistribution::GeometricRight, SeatDistribution::ZipfLeft,
                    SeatDistribution::ZipfRight}) {
    CHECK(distribution_from_string(to_string(dist)) == dist);
  }
  CHECK(entrances_from_string("1") == Entrances::OneLeft);
  CHECK(entrances_from_string("2") == Entrances::Two);
  CHECK_THROWS_AS(distribution_from_string("triangular"), std::invalid_argument);
  CHECK_THROWS_AS(entrances_from_string("3"), std::invalid_argument);
}

TEST_CASE("sample_seat: single seat and determinism") {
  SplitMix64 a(42);
  CHECK(sample_seat(SeatDistribution::ZipfRight, 1, a) == 1);

  for (auto dist : {SeatDistribution::Uniform, SeatDistribution::GeometricLeft,
                    SeatDistribution::ZipfRight}) {
    SplitMix64 r1 = trial_stream(123, 7);
    SplitMix64 r2 = trial_stream(123, 7);
    for (int i = 0; i < 200; ++i) {
      CHECK(sample_seat(dist, 9, r1) == sample_seat(dist, 9, r2));
    }
  }
}

TEST_CASE("trial_stream: distinct trials decorrelate") {
  SplitMix64 a = trial_stream(9, 0);
  SplitMix64 b = trial_stream(9, 1);
  int equal = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next_u64() == b.next_u64()) ++equal;
  }
  CHECK(equal == 0);
}

TEST_CASE("sample_seat: empirical frequencies track the PMF") {
  // 10^6 draws per law; each bin within 4 sigma of its expectation.
  const std::uint64_t draws = 1'000'000;
  struct Case {
    SeatDistribution dist;
    int n;
  };
  for (const auto& c : {Case{SeatDistribution::Uniform, 8}, Case{SeatDistribution::GeometricLeft, 6},
                        Case{SeatDistribution::GeometricRight, 6},
                        Case{SeatDistribution::ZipfLeft, 10}, Case{SeatDistribution::ZipfRight, 10}}) {
    const auto pmf = seat_pmf(c.dist, c.n);
    const auto cdf = seat_cdf(c.dist, c.n);
    std::vector<std::uint64_t> counts(pmf.size(), 0);
    SplitMix64 rng = trial_stream(2024, static_cast<std::uint64_t>(c.dist));
    for (std::uint64_t i = 0; i < draws; ++i) {
      ++counts[static_cast<std::size_t>(sample_from_cdf(cdf, rng.next_double())) - 1];
    }
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      const double expected = static_cast<double>(draws) * pmf[k];
      const double sigma = std::sqrt(static_cast<double>(draws) * pmf[k] * (1.0 - pmf[k]));
      CHECK(std::abs(static_cast<double>(counts[k]) - expected) <= 4.0 * sigma);
    }
  }
}

TEST_CASE("sample_from_cdf: boundary draws") {
  const std::vector<double> cdf{0.25, 0.5, 0.75, 1.0};
  CHECK(sample_from_cdf(cdf, 0.0) == 1);
  CHECK(sample_from_cdf(cdf, 0.25) == 2);  // u equal to a boundary goes right
  CHECK(sample_from_cdf(cdf, 0.999999) == 4);
  CHECK(sample_from_cdf(cdf, 1.0) == 4);  // rounded final entry guard
}
