#pragma once

// Test-only oracles, written against first principles and kept independent of
// the library's engines: PMFs are rebuilt inline, recursions run without
// memoization, statistics use the naive two-pass formulas.

#include <span>
#include <utility>
#include <vector>

#include "courteous/row.hpp"

namespace oracle {

// Exhaustive expectation of the instance-shrinking process for a one-entrance
// row: every (seat, courtesy) branch of the outcome tree is enumerated and
// probability-weighted. Exponential in n; intended for n <= 8.
double one_entrance_expectation(int n, courteous::SeatDistribution dist, double p);

// Same, for the two-entrance uniform row: a selfish arrival at seat k splits
// the row into independent one-entrance instances of sizes k-1 and n-k.
double two_entrance_uniform_expectation(int n, double p);

// Exhaustive expectation of the seat-labelled process: seats keep their
// original weights, each arrival draws from the weights renormalized over the
// accessible set, courtesy is fixed at sit time. Enumerates all (occupied,
// selfish) histories; intended for n <= 5.
double physical_expectation(int n, courteous::SeatDistribution dist,
                            courteous::Entrances entrances, double p);

// Plain two-pass mean and unbiased variance.
std::pair<double, double> two_pass_mean_variance(std::span<const double> samples);

}  // namespace oracle
