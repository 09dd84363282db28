#pragma once

#include <string_view>
#include <vector>

namespace courteous {

enum class Entrances {
  OneLeft,  // single entrance next to seat 1
  Two,      // entrances at both ends
};

enum class SeatDistribution {
  Uniform,
  GeometricLeft,   // strong bias towards the entrance
  GeometricRight,  // strong bias away from the entrance
  ZipfLeft,
  ZipfRight,
};

// One row instance: seat count, entrance layout, seat-choice law and the
// probability that an arrival is courteous (willing to stand and let later
// arrivals pass).
struct RowSpec {
  int seats = 1;
  Entrances entrances = Entrances::OneLeft;
  SeatDistribution distribution = SeatDistribution::Uniform;
  double courtesy = 0.0;  // p in [0, 1]

  // Throws std::invalid_argument if seats < 1 or courtesy is outside [0, 1].
  void validate() const;
};

// Exact tables for two-entrance rows exist only under the uniform law; the
// simulator accepts every combination.
bool exact_supports(SeatDistribution distribution, Entrances entrances);

// Probability of seat k (entry k-1) for a row of n seats. The geometric laws
// assign 2^-k (left bias, k counted from the entrance) resp. 2^(k-n-1) (right
// bias), with the leftover tail mass folded onto the last resp. first seat so
// each vector sums to 1. Zipf laws are 1/(k H_n) and 1/((n+1-k) H_n).
std::vector<double> seat_pmf(SeatDistribution distribution, int n);

// Inclusive prefix sums of seat_pmf; the final entry equals 1 up to rounding.
std::vector<double> seat_cdf(SeatDistribution distribution, int n);

std::string_view to_string(SeatDistribution distribution);
std::string_view to_string(Entrances entrances);  // "1" or "2"
SeatDistribution distribution_from_string(std::string_view name);
Entrances entrances_from_string(std::string_view name);

}  // namespace courteous
