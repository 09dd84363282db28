#include "courteous/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "courteous/harmonic.hpp"

namespace courteous {

namespace {

void require_seats(int n) {
  if (n < 1) {
    throw std::invalid_argument("expected seats >= 1, got " + std::to_string(n));
  }
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("courtesy probability must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

ExpectationTable make_table(int n, Entrances entrances, SeatDistribution distribution, double p) {
  ExpectationTable table;
  table.spec = RowSpec{n, entrances, distribution, p};
  table.values.assign(static_cast<std::size_t>(n), 0.0);
  return table;
}

}  // namespace

double ExpectationTable::value(int k) const {
  if (k < 1 || k > size()) {
    throw std::out_of_range("ExpectationTable::value: k out of range");
  }
  return values[static_cast<std::size_t>(k) - 1];
}

double ExpectationTable::delta(int k) const {
  if (k == 1) return value(1);
  return value(k) - value(k - 1);
}

std::vector<double> ExpectationTable::deltas() const {
  std::vector<double> out(values.size());
  for (int k = 1; k <= size(); ++k) out[static_cast<std::size_t>(k) - 1] = delta(k);
  return out;
}

double geometric_sum(double p, int k) {
  if (std::abs(1.0 - p) < 1e-8) {
    return k * (1.0 - 0.5 * (k - 1) * (1.0 - p));
  }
  return (1.0 - std::pow(p, k)) / (1.0 - p);
}

ExpectationTable uniform_one_selfish(int n) {
  require_seats(n);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::Uniform, 0.0);
  double prefix = 0.0;  // E_1 + .. + E_{k-1}
  for (int k = 1; k <= n; ++k) {
    const double e = 1.0 + prefix / k;
    table.values[k - 1] = e;
    prefix += e;
  }
  return table;
}

ExpectationTable uniform_two_selfish(int n) {
  require_seats(n);
  ExpectationTable table = make_table(n, Entrances::Two, SeatDistribution::Uniform, 0.0);
  const ExpectationTable one = uniform_one_selfish(n);
  // sum_{j=1}^{k} (E_{j-1} + E_{k-j}) = 2 sum_{j=0}^{k-1} E_j
  double prefix = 0.0;
  for (int k = 1; k <= n; ++k) {
    table.values[k - 1] = 1.0 + 2.0 * prefix / k;
    prefix += one.values[k - 1];
  }
  return table;
}

ExpectationTable uniform_one_courteous(int n, double p) {
  require_seats(n);
  require_probability(p);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::Uniform, p);
  double prev = 0.0;    // E_{k-1}
  double prefix = 0.0;  // E_1 + .. + E_{k-1}
  for (int k = 1; k <= n; ++k) {
    const double e = 1.0 + p * prev + (1.0 - p) * (prefix / k);
    table.values[k - 1] = e;
    prefix += e;
    prev = e;
  }
  return table;
}

ExpectationTable uniform_two_courteous(int n, double p) {
  require_seats(n);
  require_probability(p);
  ExpectationTable table = make_table(n, Entrances::Two, SeatDistribution::Uniform, p);
  const ExpectationTable one = uniform_one_courteous(n, p);
  double prev = 0.0;    // F_{k-1}
  double prefix = 0.0;  // E_1 + .. + E_{k-1} of the one-entrance row
  for (int k = 1; k <= n; ++k) {
    const double f = 1.0 + p * prev + 2.0 * (1.0 - p) * (prefix / k);
    table.values[k - 1] = f;
    prefix += one.values[k - 1];
    prev = f;
  }
  return table;
}

double closed_uniform_one(int n, double p) {
  require_seats(n);
  require_probability(p);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += geometric_sum(p, k) / k;
  }
  return sum;
}

double closed_uniform_two(int n, double p) {
  require_seats(n);
  require_probability(p);
  return -geometric_sum(p, n) + 2.0 * closed_uniform_one(n, p);
}

ExpectationTable geometric_left(int n, double p) {
  require_seats(n);
  require_probability(p);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::GeometricLeft, p);
  double prev = 0.0;      // L_{k-1}
  double weighted = 0.0;  // sum_{j=1}^{k-1} 2^-j L_{j-1}
  for (int k = 1; k <= n; ++k) {
    const double tail = std::ldexp(prev, -(k - 1));  // far seat carries 2^-(k-1)
    const double l = 1.0 + p * prev + (1.0 - p) * (weighted + tail);
    table.values[k - 1] = l;
    weighted += std::ldexp(prev, -k);
    prev = l;
  }
  return table;
}

double closed_geometric_left(int n, double p) {
  require_seats(n);
  require_probability(p);
  double sum = 0.0;
  double product = 1.0;  // prod_{k=1}^{l-1} (p + (1-p) 2^-k)
  for (int l = 1; l <= n; ++l) {
    sum += product;
    product *= p + (1.0 - p) * std::ldexp(1.0, -l);
  }
  return sum;
}

ExpectationTable geometric_right(int n, double p) {
  require_seats(n);
  require_probability(p);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::GeometricRight, p);
  double prev = 0.0;      // R_{k-1}
  double weighted = 0.0;  // W_k = sum_{j=2}^{k} 2^(j-k-1) R_{j-1}, via W_k = (W_{k-1} + R_{k-1})/2
  for (int k = 1; k <= n; ++k) {
    if (k > 1) weighted = 0.5 * (weighted + prev);
    const double r = 1.0 + p * prev + (1.0 - p) * weighted;
    table.values[k - 1] = r;
    prev = r;
  }
  return table;
}

ExpectationTable zipf_left_selfish(int n) {
  require_seats(n);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::ZipfLeft, 0.0);
  double h = 0.0;         // H_k
  double weighted = 0.0;  // sum_{j=1}^{k} (1/j) L_{j-1}
  double prev = 0.0;
  for (int k = 1; k <= n; ++k) {
    h += 1.0 / k;
    weighted += prev / k;
    const double l = 1.0 + weighted / h;
    table.values[k - 1] = l;
    prev = l;
  }
  return table;
}

double zipf_left_closed(int n) {
  require_seats(n);
  double h = 1.0;  // H_k
  double sum = 1.0;
  for (int k = 2; k <= n; ++k) {
    h += 1.0 / k;
    sum += 1.0 / (k * h);
  }
  return sum;
}

ExpectationTable zipf_left_courteous(int n, double p) {
  require_seats(n);
  require_probability(p);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::ZipfLeft, p);
  double h = 0.0;
  double weighted = 0.0;  // sum_{j=1}^{k} (1/j) L_{j-1}
  double prev = 0.0;
  for (int k = 1; k <= n; ++k) {
    h += 1.0 / k;
    weighted += prev / k;
    const double l = 1.0 + p * prev + (1.0 - p) * (weighted / h);
    table.values[k - 1] = l;
    prev = l;
  }
  return table;
}

namespace {

void require_zipf_right_cap(int n) {
  if (n > kZipfRightSeatCap) {
    throw std::length_error("zipf right tables cost O(n^2); the cap is " +
                            std::to_string(kZipfRightSeatCap) + " seats, got " +
                            std::to_string(n));
  }
}

}  // namespace

ExpectationTable zipf_right_selfish(int n) {
  require_seats(n);
  require_zipf_right_cap(n);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::ZipfRight, 0.0);
  double h = 0.0;
  for (int k = 1; k <= n; ++k) {
    h += 1.0 / k;
    double conv = 0.0;  // sum_{j=1}^{k-1} R_j / (k-j)
    for (int j = 1; j < k; ++j) {
      conv += table.values[j - 1] / (k - j);
    }
    table.values[k - 1] = 1.0 + conv / h;
  }
  return table;
}

ExpectationTable zipf_right_courteous(int n, double p) {
  require_seats(n);
  require_probability(p);
  require_zipf_right_cap(n);
  ExpectationTable table = make_table(n, Entrances::OneLeft, SeatDistribution::ZipfRight, p);
  if (p == 1.0) {
    for (int k = 1; k <= n; ++k) table.values[k - 1] = k;
    return table;
  }
  double h = 0.0;
  double prev = 0.0;
  for (int k = 1; k <= n; ++k) {
    h += 1.0 / k;
    double conv = 0.0;
    for (int j = 1; j < k; ++j) {
      conv += table.values[j - 1] / (k - j);
    }
    const double r = 1.0 + p * prev + (1.0 - p) * (conv / h);
    table.values[k - 1] = r;
    prev = r;
  }
  return table;
}

ExpectationTable exact_table(const RowSpec& spec) {
  spec.validate();
  if (!exact_supports(spec.distribution, spec.entrances)) {
    throw std::invalid_argument(
        "exact tables for two-entrance rows exist only under the uniform law; the "
        "two-entrance geometric and Zipf rows may be analyzed in a similar manner "
        "and are left as future work");
  }
  if (spec.entrances == Entrances::Two) {
    return uniform_two_courteous(spec.seats, spec.courtesy);
  }
  switch (spec.distribution) {
    case SeatDistribution::Uniform: return uniform_one_courteous(spec.seats, spec.courtesy);
    case SeatDistribution::GeometricLeft: return geometric_left(spec.seats, spec.courtesy);
    case SeatDistribution::GeometricRight: return geometric_right(spec.seats, spec.courtesy);
    case SeatDistribution::ZipfLeft: return zipf_left_courteous(spec.seats, spec.courtesy);
    case SeatDistribution::ZipfRight: return zipf_right_courteous(spec.seats, spec.courtesy);
  }
  throw std::logic_error("exact_table: unhandled distribution");
}

}  // namespace courteous
