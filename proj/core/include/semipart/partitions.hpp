#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "semipart/weights.hpp"

namespace semipart {

/// Exact coefficients p(0..n_max) of the weighted generating function
/// prod_m (1 - z^m)^{-e(m)} over semiprime parts m.
struct PartitionSeries {
  WeightConfig config;
  std::uint64_t n_max = 0;
  std::vector<mpz_class> counts;

  const mpz_class& at(std::uint64_t n) const { return counts.at(n); }
  /// Natural log of counts[n]; -inf when the count is zero.
  double log_at(std::uint64_t n) const;
};

/// Ascending-parts dynamic program, applied e(m) times per part.
/// Throws std::domain_error when an effective exponent is not a
/// nonnegative integer.
PartitionSeries partition_series(const WeightConfig& config, std::uint64_t n_max);

/// Independent oracle: expands the product directly by multiplicity
/// enumeration, weighting each multiset by prod C(e(m)+mult-1, mult).
/// Refuses n > 150 (exponential-time enumeration guard).
mpz_class brute_force_count(const WeightConfig& config, std::uint64_t n);

/// d[n] = counts[n+1] - counts[n] for n = 0..n_max-1 (signed).
std::vector<mpz_class> difference_series(const PartitionSeries& series);

/// Verifies sum_k p2(k) * p2ne(n-k) == p2sharp(n) for all n <= n_max.
/// Returns the first failing index, or nullopt when the identity holds.
std::optional<std::uint64_t> convolution_check(std::uint64_t n_max);

}  // namespace semipart
