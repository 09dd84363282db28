#include "courteous/row.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "courteous/harmonic.hpp"

namespace courteous {

void RowSpec::validate() const {
  if (seats < 1) {
    throw std::invalid_argument("RowSpec: seats must be >= 1, got " + std::to_string(seats));
  }
  if (!(courtesy >= 0.0 && courtesy <= 1.0)) {
    throw std::invalid_argument("RowSpec: courtesy must lie in [0, 1], got " +
                                std::to_string(courtesy));
  }
}

bool exact_supports(SeatDistribution distribution, Entrances entrances) {
  return entrances == Entrances::OneLeft || distribution == SeatDistribution::Uniform;
}

std::vector<double> seat_pmf(SeatDistribution distribution, int n) {
  if (n < 1) {
    throw std::invalid_argument("seat_pmf: n must be >= 1");
  }
  std::vector<double> pmf(static_cast<std::size_t>(n));
  switch (distribution) {
    case SeatDistribution::Uniform: {
      const double w = 1.0 / n;
      for (auto& v : pmf) v = w;
      break;
    }
    case SeatDistribution::GeometricLeft: {
      for (int k = 1; k < n; ++k) pmf[k - 1] = std::ldexp(1.0, -k);
      pmf[n - 1] = std::ldexp(1.0, -(n - 1));  // tail mass on the far seat
      break;
    }
    case SeatDistribution::GeometricRight: {
      pmf[0] = std::ldexp(1.0, -(n - 1));  // tail mass on the entrance seat
      for (int k = 2; k <= n; ++k) pmf[k - 1] = std::ldexp(1.0, k - n - 1);
      break;
    }
    case SeatDistribution::ZipfLeft: {
      const double hn = harmonic(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k) pmf[k - 1] = 1.0 / (k * hn);
      break;
    }
    case SeatDistribution::ZipfRight: {
      const double hn = harmonic(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k) pmf[k - 1] = 1.0 / ((n + 1 - k) * hn);
      break;
    }
  }
  return pmf;
}

std::vector<double> seat_cdf(SeatDistribution distribution, int n) {
  std::vector<double> cdf = seat_pmf(distribution, n);
  double running = 0.0;
  for (auto& v : cdf) {
    running += v;
    v = running;
  }
  return cdf;
}

std::string_view to_string(SeatDistribution distribution) {
  switch (distribution) {
    case SeatDistribution::Uniform: return "uniform";
    case SeatDistribution::GeometricLeft: return "geo-left";
    case SeatDistribution::GeometricRight: return "geo-right";
    case SeatDistribution::ZipfLeft: return "zipf-left";
    case SeatDistribution::ZipfRight: return "zipf-right";
  }
  return "?";
}

std::string_view to_string(Entrances entrances) {
  return entrances == Entrances::OneLeft ? "1" : "2";
}

SeatDistribution distribution_from_string(std::string_view name) {
  if (name == "uniform") return SeatDistribution::Uniform;
  if (name == "geo-left") return SeatDistribution::GeometricLeft;
  if (name == "geo-right") return SeatDistribution::GeometricRight;
  if (name == "zipf-left") return SeatDistribution::ZipfLeft;
  if (name == "zipf-right") return SeatDistribution::ZipfRight;
  throw std::invalid_argument("unknown distribution: " + std::string(name));
}

Entrances entrances_from_string(std::string_view name) {
  if (name == "1") return Entrances::OneLeft;
  if (name == "2") return Entrances::Two;
  throw std::invalid_argument("entrances must be 1 or 2, got " + std::string(name));
}

}  // namespace courteous
