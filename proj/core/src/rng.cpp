#include "courteous/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace courteous {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
  const std::uint64_t a = mix64(seed + 0x9E3779B97F4A7C15ULL);
  const std::uint64_t b = mix64(trial_index + 0xD1342543DE82EF95ULL);
  return SplitMix64(a ^ (b + 0x9E3779B97F4A7C15ULL * trial_index));
}

int sample_from_cdf(std::span<const double> cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) {
    return static_cast<int>(cdf.size());  // u beyond the rounded final entry
  }
  return static_cast<int>(it - cdf.begin()) + 1;
}

int sample_seat(SeatDistribution distribution, int n, SplitMix64& rng) {
  if (n < 1) {
    throw std::invalid_argument("sample_seat: n must be >= 1");
  }
  const std::vector<double> cdf = seat_cdf(distribution, n);
  return sample_from_cdf(cdf, rng.next_double());
}

}  // namespace courteous
