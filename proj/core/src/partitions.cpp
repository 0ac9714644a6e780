#include "semipart/partitions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "semipart/arith.hpp"
#include "semipart/sieve.hpp"

namespace semipart {

double PartitionSeries::log_at(std::uint64_t n) const {
  const mpz_class& v = counts.at(n);
  if (v == 0) return -std::numeric_limits<double>::infinity();
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

PartitionSeries partition_series(const WeightConfig& config, std::uint64_t n_max) {
  const int e_nonsquare = config.exp_nonsquare();
  const int e_square = config.exp_square();

  PartitionSeries series;
  series.config = config;
  series.n_max = n_max;
  series.counts.assign(n_max + 1, mpz_class(0));
  series.counts[0] = 1;

  const std::vector<SemiprimePart> parts = semiprime_parts(n_max);
  for (const SemiprimePart& part : parts) {
    const int e = part.weight == 1 ? e_square : e_nonsquare;
    const std::size_t m = static_cast<std::size_t>(part.value);
    for (int rep = 0; rep < e; ++rep)
      for (std::size_t i = m; i <= n_max; ++i)
        series.counts[i] += series.counts[i - m];
  }
  return series;
}

namespace {

// C(e + mult - 1, mult) as an exact integer.
mpz_class multiset_weight(int e, std::uint64_t mult) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e + mult - 1),
               static_cast<unsigned long>(mult));
  return binom;
}

// Descending-part enumeration of every multiset of parts summing to n.
mpz_class enumerate(const std::vector<SemiprimePart>& parts, std::size_t idx,
                    std::uint64_t remaining, int e_square, int e_nonsquare) {
  if (remaining == 0) return 1;
  if (idx == 0) return 0;
  mpz_class total = 0;
  const SemiprimePart& part = parts[idx - 1];
  const int e = part.weight == 1 ? e_square : e_nonsquare;
  if (e == 0 || part.value > remaining)
    return enumerate(parts, idx - 1, remaining, e_square, e_nonsquare);
  total = enumerate(parts, idx - 1, remaining, e_square, e_nonsquare);
  for (std::uint64_t mult = 1; mult * part.value <= remaining; ++mult) {
    total += multiset_weight(e, mult) *
             enumerate(parts, idx - 1, remaining - mult * part.value, e_square, e_nonsquare);
  }
  return total;
}

}  // namespace

mpz_class brute_force_count(const WeightConfig& config, std::uint64_t n) {
  if (n > 150) throw std::domain_error("brute_force_count: n > 150 exceeds the oracle budget");
  const int e_nonsquare = config.exp_nonsquare();
  const int e_square = config.exp_square();
  const std::vector<SemiprimePart> parts = semiprime_parts(n);
  return enumerate(parts, parts.size(), n, e_square, e_nonsquare);
}

std::vector<mpz_class> difference_series(const PartitionSeries& series) {
  std::vector<mpz_class> diffs;
  if (series.n_max < 1) return diffs;
  diffs.reserve(series.n_max);
  for (std::uint64_t n = 0; n < series.n_max; ++n)
    diffs.push_back(series.counts[n + 1] - series.counts[n]);
  return diffs;
}

std::optional<std::uint64_t> convolution_check(std::uint64_t n_max) {
  const PartitionSeries a = partition_series(WeightConfig::p2(), n_max);
  const PartitionSeries b = partition_series(WeightConfig::p2_distinct(), n_max);
  const PartitionSeries c = partition_series(WeightConfig::p2_sharp(), n_max);
  mpz_class acc;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    acc = 0;
    for (std::uint64_t k = 0; k <= n; ++k) acc += a.counts[k] * b.counts[n - k];
    if (acc != c.counts[n]) return n;
  }
  return std::nullopt;
}

}  // namespace semipart
