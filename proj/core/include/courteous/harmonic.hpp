#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace courteous {

// Euler-Mascheroni constant, for the H_n = ln n + gamma + 1/(2n) expansion.
inline constexpr double kEulerGamma = 0.5772156649015329;

// Grow-only table of harmonic numbers computed by forward summation.
// Index 0 holds H_0 = 0 so recurrences with an E_0 term stay uniform; the
// public harmonic() entry point starts at n = 1.
//
// Not synchronized. Use one instance per thread (harmonic() does) or guard
// growth externally; entries never change once written.
class HarmonicCache {
 public:
  // H_n, growing the table as needed.
  double at(std::size_t n);

  // {H_0, H_1, ..., H_n} as a contiguous view, invalidated by the next growth.
  std::span<const double> prefix(std::size_t n);

  std::size_t size() const noexcept { return values_.size() - 1; }

 private:
  std::vector<double> values_{0.0};  // values_[k] = H_k
};

// H_n from a thread-local cache. Throws std::domain_error for n = 0.
double harmonic(std::size_t n);

// {H_0..H_n} view of the thread-local cache. Invalidated when a later call
// grows the cache.
std::span<const double> harmonic_prefix(std::size_t n);

}  // namespace courteous
