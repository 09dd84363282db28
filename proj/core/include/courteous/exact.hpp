#pragma once

#include <vector>

#include "courteous/row.hpp"

namespace courteous {

// Expected occupancy for every prefix size of one row family: values[k-1] is
// the expected number of seated arrivals in a k-seat row. The recurrences
// produce the whole ladder 1..n in one bottom-up pass, so tables keep it all.
struct ExpectationTable {
  RowSpec spec;
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double value(int k) const;           // k in [1, size()]
  double delta(int k) const;           // value(k) - value(k-1), with value(0) := 0
  std::vector<double> deltas() const;  // delta(1)..delta(n)
};

// Finite geometric series sum_{j=0}^{k-1} p^j = (1 - p^k)/(1 - p), switching
// to the limit expansion k (1 - (k-1)(1-p)/2) when |1 - p| < 1e-8.
double geometric_sum(double p, int k);

// --- uniform seat choice ---------------------------------------------------

// E_k = 1 + (1/k) sum_{j<k} E_j; equals the harmonic numbers.
ExpectationTable uniform_one_selfish(int n);

// F_k = 1 + (1/k) sum_j (E_{j-1} + E_{k-j}) with E from the one-entrance row.
ExpectationTable uniform_two_selfish(int n);

// E_k = 1 + p E_{k-1} + ((1-p)/k) sum_j E_{j-1}.
ExpectationTable uniform_one_courteous(int n, double p);

// F_k = 1 + p F_{k-1} + ((1-p)/k) sum_j (E_{j-1} + E_{k-j}); satisfies
// F_k = 2 E_k - (1 - p^k)/(1 - p)  (and F_k = 2 E_k - k at p = 1).
ExpectationTable uniform_two_courteous(int n, double p);

// Closed forms: sum_k (1-p^k)/(k(1-p)) and -(1-p^n)/(1-p) + twice that sum.
double closed_uniform_one(int n, double p);
double closed_uniform_two(int n, double p);

// --- geometric seat choice, one entrance -----------------------------------

// L_k = 1 + p L_{k-1} + (1-p) [ sum_{j<k} 2^-j L_{j-1} + 2^-(k-1) L_{k-1} ].
ExpectationTable geometric_left(int n, double p);

// sum_{l=1}^{n} prod_{k<l} (p + (1-p) 2^-k).
double closed_geometric_left(int n, double p);

// R_k = 1 + p R_{k-1} + (1-p) sum_{j=2}^{k} 2^(j-k-1) R_{j-1}.
// The seat-1 term is absent because a selfish arrival there blocks everything.
// At p = 0 the values are exactly (k+1)/2; deltas stay >= 1/2 for every p.
ExpectationTable geometric_right(int n, double p);

// --- Zipf seat choice, one entrance ----------------------------------------

// L_k = 1 + (1/H_k) sum_j (1/j) L_{j-1}; closed form 1 + sum_{k=2}^n 1/(k H_k).
ExpectationTable zipf_left_selfish(int n);
double zipf_left_closed(int n);

// L_k = 1 + p L_{k-1} + ((1-p)/H_k) sum_j (1/j) L_{j-1}.
ExpectationTable zipf_left_courteous(int n, double p);

// R_k = 1 + (1/H_k) sum_{j<k} R_j/(k-j). Quadratic cost; capped at
// kZipfRightSeatCap seats.
ExpectationTable zipf_right_selfish(int n);

// R_k(p) = 1 + p R_{k-1}(p) + ((1-p)/H_k) sum_{j<k} R_j(p)/(k-j); p = 1 short-
// circuits to values[k] = k.
ExpectationTable zipf_right_courteous(int n, double p);

// The right-bias Zipf recurrences convolve over all smaller sizes, so a table
// costs O(n^2); larger requests are rejected with std::length_error.
inline constexpr int kZipfRightSeatCap = 10000;

// Table for an arbitrary row spec. Throws std::invalid_argument for the
// two-entrance geometric/Zipf combinations, which have no exact engine.
ExpectationTable exact_table(const RowSpec& spec);

}  // namespace courteous
