#pragma once

#include <array>
#include <cstdint>

#include "semipart/weights.hpp"

namespace semipart {

/// Solution of the saddle equation n = rho Phi'(rho) for one weight
/// configuration, with the moments m = 0..3 evaluated at the saddle.
struct SaddleSolution {
  std::uint64_t n = 0;
  WeightConfig config;
  double X = 0;
  double rho = 0;
  std::array<double, 4> phi_moments{};  // (rho d/drho)^m Phi, m = 0..3
  double log_psi = 0;                   // Phi(rho) = phi_moments[0]
};

/// Solves n = rho Phi'(rho) for X = -1/log(rho) by bracketing and
/// bisection on the strictly increasing saddle map; relative residual
/// |rho Phi'(rho) - n| <= 1e-6 n. Requires n >= 4.
SaddleSolution solve_saddle(std::uint64_t n, const WeightConfig& config);

/// Two-term-corrected closed form for X(n):
///   sqrt( (n/l) log(n/l) / (4 zeta(2) (loglog(n/l) - log 2 + M)) )
///   * (1 + loglog(n/l)/(2 log(n/l)) - logloglog(n/l)/(2 log(n/l)) ).
/// Throws std::domain_error when loglog(n/l) - log 2 + M <= 0.
double closed_form_X(std::uint64_t n, double lambda);

/// log of the Gaussian saddle-point estimate
///   n/X + Phi(rho) - log(2 pi Phi_(2)(rho))/2.
/// Requires n >= 16.
double saddle_estimate(std::uint64_t n, const WeightConfig& config);

/// log of the forward-difference estimate: saddle_estimate - log X.
double difference_estimate(std::uint64_t n, const WeightConfig& config);

/// Both log-estimates from a single saddle solve.
struct SaddleEstimates {
  SaddleSolution solution;
  double log_estimate = 0;
  double log_difference_estimate = 0;
};
SaddleEstimates saddle_estimates(std::uint64_t n, const WeightConfig& config);

/// Numerical check of the Laplace-integral law
///   int_L^inf e^{-a t} t^lambda (loglog t + M)/(log t)^b dt
///   ~ Gamma(lambda+1) (loglog(1/a) + M) / (a^{lambda+1} (log(1/a))^b).
/// With pure_gamma the weight (loglog t + M)/(log t)^b is replaced by 1 and
/// the reference becomes Gamma(lambda+1)/a^{lambda+1}.
struct LaplaceReport {
  double integral = 0;
  double formula = 0;
  double ratio = 0;
  double quadrature_error = 0;
};
LaplaceReport laplace_check(double a, double lambda_exp, double b, double L,
                            bool pure_gamma = false);

}  // namespace semipart
