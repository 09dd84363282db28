#pragma once

#include <cstdint>
#include <span>

#include "courteous/row.hpp"

namespace courteous {

// splitmix64: one add + three xor-multiply-shift rounds per draw, period 2^64.
// Draw values are part of the reproducibility contract and must not change
// across versions or platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

// Independent stream for trial `trial_index` of a run keyed by `seed`: the
// splitmix64 finalizer is applied to each key half separately, so trials may
// be generated in any order and always see the same stream.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index);

// Seat draw by inverse CDF over the materialized PMF: the smallest k with
// u < cdf[k]. Identical seeds yield identical draws.
int sample_seat(SeatDistribution distribution, int n, SplitMix64& rng);

// The same draw rule against a prebuilt seat_cdf(), for callers that keep
// CDFs around across many draws.
int sample_from_cdf(std::span<const double> cdf, double u);

}  // namespace courteous
