#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "courteous/rng.hpp"
#include "courteous/row.hpp"

namespace courteous {

enum class Semantics {
  Model,     // instance-shrinking recursion: a courteous arrival turns the
             // row into a relabeled instance one seat smaller
  Physical,  // seats keep their labels and weights; the accessible set is
             // recomputed per arrival
};

struct SummaryStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;   // unbiased sample variance
  double std_error = 0.0;  // sqrt(variance / count)
  double ci95_low = 0.0;   // mean -+ 1.96 std_error
  double ci95_high = 0.0;
};

struct SimulationSummary {
  RowSpec spec;
  Semantics semantics = Semantics::Model;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  SummaryStats stats;
};

// Mean, unbiased variance, standard error and the 95% interval in a single
// online pass (Welford). Throws std::invalid_argument for fewer than 2 samples.
SummaryStats summarize(std::span<const double> samples);

// Seated-count per trial. Trial i draws from trial_stream(seed, i), so
// extending the trial count never changes earlier values. Each arrival draws
// its seat first and its courtesy second.
std::vector<double> model_trial_values(const RowSpec& spec, std::uint64_t trials,
                                       std::uint64_t seed);
std::vector<double> physical_trial_values(const RowSpec& spec, std::uint64_t trials,
                                          std::uint64_t seed);

SimulationSummary simulate_model(const RowSpec& spec, std::uint64_t trials, std::uint64_t seed);
SimulationSummary simulate_physical(const RowSpec& spec, std::uint64_t trials, std::uint64_t seed);

std::string_view to_string(Semantics semantics);
Semantics semantics_from_string(std::string_view name);

namespace detail {

// Lazily materialized seat CDFs for every instance size the model recursion
// visits. Caching stops past a memory budget; draws fall back to building the
// CDF in a scratch buffer, with bit-identical results either way.
class CdfCache {
 public:
  explicit CdfCache(SeatDistribution distribution) : distribution_(distribution) {}

  std::span<const double> get(int m);

 private:
  static constexpr std::size_t kMaxCachedEntries = 30'000'000;  // ~240 MB of doubles

  SeatDistribution distribution_;
  std::vector<std::vector<double>> cdfs_;
  std::vector<double> scratch_;
  std::size_t cached_entries_ = 0;
};

// One model-semantics trial of a single row, consuming draws from rng. The
// theatre simulator chains several of these on one per-trial stream.
std::uint64_t run_model_row(const RowSpec& spec, CdfCache& cache, SplitMix64& rng);

}  // namespace detail

}  // namespace courteous
