#include "semipart/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "semipart/saddle.hpp"

namespace semipart {

namespace {

const TheoremConstants& constants_theorem1() {
  static const TheoremConstants c = theorem_constants(0.5, Variant::theorem1);
  return c;
}

}  // namespace

AsymptoticEstimate theorem_main(std::uint64_t n, const WeightConfig& config, Variant variant,
                                LogArgument log_argument) {
  if (n < 16) throw std::domain_error("theorem_main: requires n >= 16");
  const double lambda = config.lambda_real();
  const TheoremConstants consts =
      variant == Variant::theorem1 ? constants_theorem1()
                                   : theorem_constants(lambda, Variant::theorem72);

  bool use_half = config.name != ConfigName::p2_sharp;
  if (log_argument == LogArgument::half_n) use_half = true;
  if (log_argument == LogArgument::full_n) use_half = false;

  const double nn = static_cast<double>(n);
  const double l_arg = std::log(use_half ? nn / 2.0 : nn);
  const double ll_c2 = std::log(std::log(nn)) + consts.c2.val();
  if (!(ll_c2 > 0)) throw std::domain_error("theorem_main: loglog n + c2 must be positive");

  AsymptoticEstimate est;
  est.n = n;
  est.set_name = config.token();
  est.variant = variant;
  est.prefactor_log = std::log(consts.c1.val()) - 0.75 * std::log(nn) -
                      0.25 * std::log(l_arg) + 0.25 * std::log(ll_c2);
  est.exponent = consts.c3.val() * std::sqrt(nn * ll_c2 / l_arg);
  est.log_value = est.prefactor_log + est.exponent;
  return est;
}

double difference_ratio(std::uint64_t n) {
  if (n < 16) throw std::domain_error("difference_ratio: requires n >= 16");
  const TheoremConstants& consts = constants_theorem1();
  const double nn = static_cast<double>(n);
  const double ll_c2 = consts.c2.val() + std::log(std::log(nn));
  if (!(ll_c2 > 0)) throw std::domain_error("difference_ratio: c2 + loglog n must be positive");
  return consts.c4.val() * std::sqrt(ll_c2 / (nn * std::log(nn / 2.0)));
}

double exponent_regressor(std::uint64_t n) {
  const TheoremConstants& consts = constants_theorem1();
  const double nn = static_cast<double>(n);
  const double ll_c2 = std::log(std::log(nn)) + consts.c2.val();
  return std::sqrt(nn * ll_c2 / std::log(nn / 2.0));
}

ComparisonReport comparison_report(const std::vector<std::uint64_t>& n_list,
                                   const WeightConfig& config, const PartitionSeries* exact) {
  ComparisonReport report;
  report.rows.reserve(n_list.size());

  std::vector<double> zs, ys;
  for (std::uint64_t n : n_list) {
    ComparisonRow row;
    row.n = n;
    row.log_saddle = saddle_estimate(n, config);
    row.log_thm1 = theorem_main(n, config, Variant::theorem1).log_value;
    row.log_thm72 = theorem_main(n, config, Variant::theorem72).log_value;
    if (exact != nullptr && n <= exact->n_max) {
      row.log_exact = exact->log_at(n);
      zs.push_back(exponent_regressor(n));
      ys.push_back(row.log_exact);
    } else {
      row.log_exact = std::numeric_limits<double>::quiet_NaN();
      report.partial = true;
    }
    report.rows.push_back(row);
  }

  // Ordinary least squares with intercept: y = intercept + c3_hat * z.
  const std::size_t k = zs.size();
  if (k >= 2) {
    double sz = 0, sy = 0;
    for (std::size_t i = 0; i < k; ++i) {
      sz += zs[i];
      sy += ys[i];
    }
    const double mz = sz / static_cast<double>(k), my = sy / static_cast<double>(k);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
      sxx += (zs[i] - mz) * (zs[i] - mz);
      sxy += (zs[i] - mz) * (ys[i] - my);
    }
    if (sxx > 0) {
      FitResult fit;
      fit.valid = true;
      fit.points = k;
      fit.c3_hat = sxy / sxx;
      fit.intercept = my - fit.c3_hat * mz;
      double rss = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const double r = ys[i] - fit.intercept - fit.c3_hat * zs[i];
        rss += r * r;
      }
      if (k > 2) {
        fit.std_error = std::sqrt(rss / static_cast<double>(k - 2) / sxx);
        fit.ci_low = fit.c3_hat - 1.96 * fit.std_error;
        fit.ci_high = fit.c3_hat + 1.96 * fit.std_error;
      } else {
        fit.ci_low = fit.ci_high = fit.c3_hat;
      }
      report.fit = fit;
    }
  }
  return report;
}

}  // namespace semipart
