#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "semipart/weights.hpp"

namespace semipart {

/// A truncated evaluation of Phi(rho e(alpha)) with a certified bound on
/// the truncation error. At alpha = 0 the imaginary part is exactly zero.
struct PhiEvaluation {
  double rho = 0;
  double alpha = 0;
  std::complex<long double> value{0, 0};
  std::uint64_t truncation_j = 0;
  std::uint64_t part_limit = 0;
  long double tail_bound = 0;
};

/// Phi over semiprime parts with w2 weights:
/// sum_{j>=1} (1/j) sum_m w2(m) rho^{mj} e(m j alpha).
/// Requires 0 < rho < 1; throws BudgetError when the certified tail cannot
/// reach precision_target within the part/j budget.
PhiEvaluation phi_p2(double rho, double alpha, double precision_target);

/// Same with parts p^2 only.
PhiEvaluation phi_p2sq(double rho, double alpha, double precision_target);

/// lambda * phi_p2 + mu * phi_p2sq.
PhiEvaluation phi_config(const WeightConfig& config, double rho, double alpha,
                         double precision_target);

/// Exact (truncated, certified) moment (rho d/drho)^m Phi at alpha = 0,
/// for m in 0..3. Relative accuracy rel_target.
double phi_moment_exact(int m, double X, const WeightConfig& config,
                        double rel_target = 1e-9);

/// Closed-form moment law: lambda * 2 zeta(2) Gamma(m+1) X^{m+1}
/// (M + loglog X)/log X + mu * Gamma(m+1/2) zeta(3/2) X^{m+1/2}/log X.
/// Requires X > e.
double phi_moment_asymptotic(int m, double X, const WeightConfig& config);

/// Power-series coefficients d[4..limit] of Phi_config: d[m] =
/// sum_{j | m, m/j a part} e(part) / j, with e() the effective weights
/// lambda*w2 and mu. Used by circle-method sampling, where truncating at
/// degree `limit` leaves every coefficient of exp(Phi) below `limit` exact.
std::vector<double> phi_power_series(const WeightConfig& config, std::uint64_t limit);

}  // namespace semipart
