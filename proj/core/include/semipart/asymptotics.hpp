#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semipart/partitions.hpp"
#include "semipart/special_values.hpp"
#include "semipart/weights.hpp"

namespace semipart {

/// Closed-form log estimate split into its polynomial prefactor and its
/// exponential part: log_value = prefactor_log + exponent.
struct AsymptoticEstimate {
  std::uint64_t n = 0;
  std::string set_name;
  double log_value = 0;
  Variant variant = Variant::theorem1;
  double prefactor_log = 0;
  double exponent = 0;
};

/// Which logarithm argument the formula uses at second order: the p2 and
/// p2ne sets use log(n/2), the p2sharp set uses log(n).
enum class LogArgument { by_set, half_n, full_n };

/// log estimate = log(c1) - 3/4 log n - 1/4 log(Larg) + 1/4 log(loglog n + c2)
///                + c3 sqrt(n (loglog n + c2) / Larg).
/// Requires n >= 16 and loglog n + c2 > 0.
AsymptoticEstimate theorem_main(std::uint64_t n, const WeightConfig& config, Variant variant,
                                LogArgument log_argument = LogArgument::by_set);

/// Predicted ratio (p(n+1) - p(n))/p(n) = c4 sqrt((c2 + loglog n)/(n log(n/2))).
double difference_ratio(std::uint64_t n);

/// Regressor z(n) = sqrt(n (loglog n + c2) / log(n/2)) used for the
/// empirical exponent fit.
double exponent_regressor(std::uint64_t n);

struct FitResult {
  bool valid = false;
  double c3_hat = 0;
  double intercept = 0;
  double std_error = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::size_t points = 0;
};

struct ComparisonRow {
  std::uint64_t n = 0;
  double log_exact = 0;  // NaN when the exact series does not reach n
  double log_saddle = 0;
  double log_thm1 = 0;
  double log_thm72 = 0;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  FitResult fit;
  bool partial = false;  // some rows lack exact data
};

/// Per-n comparison of exact, saddle and closed-form log-counts, plus a
/// least-squares fit of log_exact against the exponent regressor.
/// `exact` may be null; rows then carry NaN exact values and partial=true.
ComparisonReport comparison_report(const std::vector<std::uint64_t>& n_list,
                                   const WeightConfig& config, const PartitionSeries* exact);

}  // namespace semipart
