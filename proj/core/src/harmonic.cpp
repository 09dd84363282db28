#include "courteous/harmonic.hpp"

#include <stdexcept>

namespace courteous {

double HarmonicCache::at(std::size_t n) {
  if (n >= values_.size()) {
    values_.reserve(n + 1);
    for (std::size_t k = values_.size(); k <= n; ++k) {
      values_.push_back(values_.back() + 1.0 / static_cast<double>(k));
    }
  }
  return values_[n];
}

std::span<const double> HarmonicCache::prefix(std::size_t n) {
  at(n);
  return {values_.data(), n + 1};
}

namespace {

HarmonicCache& thread_cache() {
  thread_local HarmonicCache cache;
  return cache;
}

}  // namespace

double harmonic(std::size_t n) {
  if (n == 0) {
    throw std::domain_error("harmonic: n must be >= 1");
  }
  return thread_cache().at(n);
}

std::span<const double> harmonic_prefix(std::size_t n) {
  return thread_cache().prefix(n);
}

}  // namespace courteous
