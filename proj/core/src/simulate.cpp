#include "courteous/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "courteous/rng.hpp"

namespace courteous {

SummaryStats summarize(std::span<const double> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("summarize: need at least 2 samples");
  }
  double mean = 0.0;
  double m2 = 0.0;
  std::uint64_t count = 0;
  for (double x : samples) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }
  SummaryStats stats;
  stats.count = count;
  stats.mean = mean;
  stats.variance = m2 / static_cast<double>(count - 1);
  stats.std_error = std::sqrt(stats.variance / static_cast<double>(count));
  stats.ci95_low = mean - 1.96 * stats.std_error;
  stats.ci95_high = mean + 1.96 * stats.std_error;
  return stats;
}

namespace detail {

std::span<const double> CdfCache::get(int m) {
  const auto idx = static_cast<std::size_t>(m);
  if (idx >= cdfs_.size()) cdfs_.resize(idx + 1);
  if (!cdfs_[idx].empty()) return cdfs_[idx];
  if (cached_entries_ + idx <= kMaxCachedEntries) {
    cdfs_[idx] = seat_cdf(distribution_, m);
    cached_entries_ += idx;
    return cdfs_[idx];
  }
  scratch_ = seat_cdf(distribution_, m);
  return scratch_;
}

namespace {

// One-entrance instance of size m: a selfish arrival at seat k shrinks the
// instance to k-1, a courteous one to m-1.
std::uint64_t run_one_entrance(int m, double p, CdfCache& cache, SplitMix64& rng) {
  std::uint64_t seated = 0;
  while (m > 0) {
    const int k = sample_from_cdf(cache.get(m), rng.next_double());
    const bool courteous_arrival = rng.next_bernoulli(p);
    ++seated;
    m = courteous_arrival ? m - 1 : k - 1;
  }
  return seated;
}

// Two entrances: a selfish arrival at seat k splits the row into independent
// one-entrance instances of sizes k-1 and m-k (left part resolved first).
std::uint64_t run_two_entrances(int m, double p, CdfCache& cache, SplitMix64& rng) {
  std::uint64_t seated = 0;
  while (m > 0) {
    const int k = sample_from_cdf(cache.get(m), rng.next_double());
    const bool courteous_arrival = rng.next_bernoulli(p);
    ++seated;
    if (courteous_arrival) {
      --m;
    } else {
      seated += run_one_entrance(k - 1, p, cache, rng);
      seated += run_one_entrance(m - k, p, cache, rng);
      break;
    }
  }
  return seated;
}

}  // namespace

std::uint64_t run_model_row(const RowSpec& spec, CdfCache& cache, SplitMix64& rng) {
  return spec.entrances == Entrances::Two
             ? run_two_entrances(spec.seats, spec.courtesy, cache, rng)
             : run_one_entrance(spec.seats, spec.courtesy, cache, rng);
}

namespace {

// Fenwick pair over seat weights and empty-seat counts, indices 1..n.
struct SeatIndex {
  int n = 0;
  std::vector<double> weight;  // 1-based partial sums
  std::vector<int> count;

  void build(const std::vector<double>& weights) {
    n = static_cast<int>(weights.size());
    weight.assign(static_cast<std::size_t>(n) + 1, 0.0);
    count.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
      weight[static_cast<std::size_t>(i)] += weights[static_cast<std::size_t>(i) - 1];
      count[static_cast<std::size_t>(i)] += 1;
      const int parent = i + (i & -i);
      if (parent <= n) {
        weight[static_cast<std::size_t>(parent)] += weight[static_cast<std::size_t>(i)];
        count[static_cast<std::size_t>(parent)] += count[static_cast<std::size_t>(i)];
      }
    }
  }

  void remove(int i, double w) {
    for (; i <= n; i += i & -i) {
      weight[static_cast<std::size_t>(i)] -= w;
      count[static_cast<std::size_t>(i)] -= 1;
    }
  }

  double prefix_weight(int i) const {
    double s = 0.0;
    for (; i > 0; i -= i & -i) s += weight[static_cast<std::size_t>(i)];
    return s;
  }

  int prefix_count(int i) const {
    int s = 0;
    for (; i > 0; i -= i & -i) s += count[static_cast<std::size_t>(i)];
    return s;
  }

  // Smallest index whose cumulative weight exceeds target.
  int select(double target) const {
    int pos = 0;
    int step = 1;
    while ((step << 1) <= n) step <<= 1;
    for (; step > 0; step >>= 1) {
      const int next = pos + step;
      if (next <= n && weight[static_cast<std::size_t>(next)] <= target) {
        target -= weight[static_cast<std::size_t>(next)];
        pos = next;
      }
    }
    return pos + 1;
  }
};

// Seat-labelled process. Which entrance an arrival walks through never shows
// up in the state (blocking depends only on where selfish occupants sit), so
// arrivals are taken to use the nearer entrance that reaches their seat,
// left on ties, without any code for it.
struct PhysicalRow {
  const RowSpec& spec;
  std::vector<double> weights;
  SeatIndex prototype;
  std::vector<char> occupied;

  explicit PhysicalRow(const RowSpec& s) : spec(s), weights(seat_pmf(s.distribution, s.seats)) {
    prototype.build(weights);
  }

  // Clamp a selected index into [lo, hi] and onto an empty seat; floating
  // round-off at region boundaries can land one seat off.
  int snap(int seat, int lo, int hi) const {
    if (seat < lo) seat = lo;
    if (seat > hi) seat = hi;
    while (seat <= hi && occupied[static_cast<std::size_t>(seat) - 1]) ++seat;
    if (seat > hi) {
      seat = hi;
      while (seat >= lo && occupied[static_cast<std::size_t>(seat) - 1]) --seat;
    }
    return seat;
  }

  std::uint64_t run_trial(SplitMix64& rng) {
    const int n = spec.seats;
    const double p = spec.courtesy;
    SeatIndex index = prototype;  // O(n) reset by copy
    occupied.assign(static_cast<std::size_t>(n), 0);
    int leftmost_selfish = n + 1;
    int rightmost_selfish = 0;
    std::uint64_t seated = 0;
    const bool two = spec.entrances == Entrances::Two;
    while (true) {
      // Accessible region(s): empty seats before the first selfish occupant
      // seen from each open entrance.
      int seat;
      if (!two || rightmost_selfish < leftmost_selfish) {
        // single contiguous region [1, hi]; for two entrances with no
        // blocking overlap this is the whole row
        const int hi = two ? n : leftmost_selfish - 1;
        if (hi < 1 || index.prefix_count(hi) == 0) break;
        const double total = index.prefix_weight(hi);
        seat = snap(index.select(rng.next_double() * total), 1, hi);
      } else {
        const int left_hi = leftmost_selfish - 1;
        const int right_lo = rightmost_selfish + 1;
        const int left_count = left_hi >= 1 ? index.prefix_count(left_hi) : 0;
        const int right_count =
            right_lo <= n ? index.prefix_count(n) - index.prefix_count(right_lo - 1) : 0;
        if (left_count + right_count == 0) break;
        const double w_left = left_hi >= 1 ? index.prefix_weight(left_hi) : 0.0;
        const double w_right =
            right_lo <= n ? index.prefix_weight(n) - index.prefix_weight(right_lo - 1) : 0.0;
        const double target = rng.next_double() * (w_left + w_right);
        if (left_count > 0 && (target < w_left || right_count == 0)) {
          seat = snap(index.select(target), 1, left_hi);
        } else {
          const double shifted = (target - w_left) + index.prefix_weight(right_lo - 1);
          seat = snap(index.select(shifted), right_lo, n);
        }
      }
      const bool courteous_arrival = rng.next_bernoulli(p);
      occupied[static_cast<std::size_t>(seat) - 1] = 1;
      index.remove(seat, weights[static_cast<std::size_t>(seat) - 1]);
      ++seated;
      if (!courteous_arrival) {
        if (seat < leftmost_selfish) leftmost_selfish = seat;
        if (seat > rightmost_selfish) rightmost_selfish = seat;
      }
    }
    return seated;
  }
};

void require_trials(std::uint64_t trials) {
  if (trials == 0) {
    throw std::invalid_argument("simulation needs trials >= 1");
  }
}

SummaryStats stats_for(const std::vector<double>& values) {
  if (values.size() >= 2) return summarize(values);
  SummaryStats stats;  // single trial: variance degenerates to 0
  stats.count = 1;
  stats.mean = values.front();
  stats.ci95_low = stats.ci95_high = values.front();
  return stats;
}

}  // namespace
}  // namespace detail

std::vector<double> model_trial_values(const RowSpec& spec, std::uint64_t trials,
                                       std::uint64_t seed) {
  spec.validate();
  detail::require_trials(trials);
  detail::CdfCache cache(spec.distribution);
  std::vector<double> values;
  values.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    SplitMix64 rng = trial_stream(seed, i);
    values.push_back(static_cast<double>(detail::run_model_row(spec, cache, rng)));
  }
  return values;
}

std::vector<double> physical_trial_values(const RowSpec& spec, std::uint64_t trials,
                                          std::uint64_t seed) {
  spec.validate();
  detail::require_trials(trials);
  detail::PhysicalRow row(spec);
  std::vector<double> values;
  values.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    SplitMix64 rng = trial_stream(seed, i);
    values.push_back(static_cast<double>(row.run_trial(rng)));
  }
  return values;
}

SimulationSummary simulate_model(const RowSpec& spec, std::uint64_t trials, std::uint64_t seed) {
  const std::vector<double> values = model_trial_values(spec, trials, seed);
  return SimulationSummary{spec, Semantics::Model, trials, seed, detail::stats_for(values)};
}

SimulationSummary simulate_physical(const RowSpec& spec, std::uint64_t trials,
                                    std::uint64_t seed) {
  const std::vector<double> values = physical_trial_values(spec, trials, seed);
  return SimulationSummary{spec, Semantics::Physical, trials, seed, detail::stats_for(values)};
}

std::string_view to_string(Semantics semantics) {
  return semantics == Semantics::Model ? "model" : "physical";
}

Semantics semantics_from_string(std::string_view name) {
  if (name == "model") return Semantics::Model;
  if (name == "physical") return Semantics::Physical;
  throw std::invalid_argument("semantics must be 'model' or 'physical', got " + std::string(name));
}

}  // namespace courteous
