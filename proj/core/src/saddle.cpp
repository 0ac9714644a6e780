#include "semipart/saddle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "semipart/errors.hpp"
#include "semipart/phi.hpp"
#include "semipart/special_values.hpp"

namespace semipart {

namespace {

// Adaptive Simpson with explicit error accounting.
struct SimpsonResult {
  double value;
  double error;
};

double simpson_slice(double a, double b, double fa,
                     double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4 * fm + fb);
}

void adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb, double whole, double tol, int depth,
                      SimpsonResult& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_slice(a, m, fa, flm, fm);
  const double right = simpson_slice(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  // Below this floor the discrepancy is rounding noise; refining further
  // cannot help.
  const double noise = 4e-15 * (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(delta) <= noise) {
    out.value += left + right + delta / 15.0;
    out.error += std::abs(delta);
    return;
  }
  if (std::abs(delta) <= 15 * tol) {
    out.value += left + right + delta / 15.0;
    out.error += std::abs(delta) / 15.0;
    return;
  }
  adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, out);
  adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, out);
}

SimpsonResult integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson_slice(a, b, fa, fm, fb);
  SimpsonResult out{0, 0};
  const double tol = rel_tol * std::max(std::abs(whole), 1e-300);
  adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 44, out);
  if (!(out.error <= 1e-4 * std::abs(out.value)))
    throw BudgetError("quadrature did not converge", out.error);
  return out;
}

}  // namespace

double closed_form_X(std::uint64_t n, double lambda) {
  if (!(lambda > 0)) throw std::domain_error("closed_form_X: requires lambda > 0");
  const double y = static_cast<double>(n) / lambda;
  if (!(y > 1.0)) throw std::domain_error("closed_form_X: n/lambda too small");
  const double L = std::log(y);
  const double LL = std::log(L);
  static const double M = meissel_mertens().val();
  const double denom_term = LL - std::log(2.0) + M;
  if (!(denom_term > 0))
    throw std::domain_error("closed_form_X: loglog(n/lambda) - log 2 + M must be positive");
  static const double zeta2 = riemann_zeta(2.0).val();
  const double main = std::sqrt(y * L / (4 * zeta2 * denom_term));
  const double LLL = std::log(LL);
  return main * (1 + 0.5 * LL / L - 0.5 * LLL / L);
}

SaddleSolution solve_saddle(std::uint64_t n, const WeightConfig& config) {
  if (n < 4) throw std::domain_error("solve_saddle: requires n >= 4");
  const double target = static_cast<double>(n);

  auto map = [&](double X) { return phi_moment_exact(1, X, config, 1e-9); };

  double X0 = 1.0;
  try {
    X0 = closed_form_X(n, config.lambda_real());
  } catch (const std::domain_error&) {
    X0 = 1.0;  // small n: fall back to geometric bracket expansion
  }
  double lo = X0 / 4, hi = X0 * 4;
  int guard = 0;
  while (map(lo) > target) {
    lo /= 2;
    if (++guard > 200) throw std::runtime_error("solve_saddle: bracketing failed (low)");
  }
  guard = 0;
  while (map(hi) < target) {
    hi *= 2;
    if (++guard > 200) throw std::runtime_error("solve_saddle: bracketing failed (high)");
  }

  double mid = 0.5 * (lo + hi), val = 0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    val = map(mid);
    if (std::abs(val - target) <= 1e-7 * target) break;
    (val < target ? lo : hi) = mid;
    if ((hi - lo) <= 1e-12 * mid) break;
  }

  SaddleSolution sol;
  sol.n = n;
  sol.config = config;
  sol.X = mid;
  sol.rho = std::exp(-1.0 / mid);
  for (int m = 0; m <= 3; ++m)
    sol.phi_moments[static_cast<std::size_t>(m)] = phi_moment_exact(m, mid, config, 1e-9);
  sol.log_psi = sol.phi_moments[0];
  return sol;
}

SaddleEstimates saddle_estimates(std::uint64_t n, const WeightConfig& config) {
  if (n < 16) throw std::domain_error("saddle_estimate: requires n >= 16");
  SaddleEstimates out;
  out.solution = solve_saddle(n, config);
  const SaddleSolution& s = out.solution;
  out.log_estimate = static_cast<double>(n) / s.X + s.phi_moments[0] -
                     0.5 * std::log(2 * M_PI * s.phi_moments[2]);
  out.log_difference_estimate = out.log_estimate - std::log(s.X);
  return out;
}

double saddle_estimate(std::uint64_t n, const WeightConfig& config) {
  return saddle_estimates(n, config).log_estimate;
}

double difference_estimate(std::uint64_t n, const WeightConfig& config) {
  return saddle_estimates(n, config).log_difference_estimate;
}

LaplaceReport laplace_check(double a, double lambda_exp, double b, double L, bool pure_gamma) {
  if (!(a > 0 && a <= 1e-2))
    throw std::domain_error("laplace_check: requires 0 < a <= 1e-2");
  if (!(lambda_exp > 0)) throw std::domain_error("laplace_check: requires lambda > 0");
  if (!(b >= 0)) throw std::domain_error("laplace_check: requires b >= 0");
  if (!(L > 1)) throw std::domain_error("laplace_check: requires L > 1");
  static const double M = meissel_mertens().val();

  // Substituting t = s/a turns the integral into
  // a^{-lambda-1} int_{L a}^inf e^{-s} s^lambda w(s/a) ds.
  auto weight = [&](double t) {
    if (pure_gamma) return 1.0;
    return (std::log(std::log(t)) + M) / std::pow(std::log(t), b);
  };
  auto integrand = [&](double s) {
    return std::exp(-s + lambda_exp * std::log(s)) * weight(s / a);
  };

  const double s_hi = std::max(80.0, 12.0 * lambda_exp);
  const SimpsonResult core = integrate(integrand, L * a, s_hi, 1e-10);
  // Tail: |w(s/a)| <= max(1, s) for s >= 3, and
  // int_S^inf e^{-s} s^l ds <= 2 e^{-S} S^l for S >= 2 l.
  const double tail = 2 * std::exp(-s_hi + (lambda_exp + 1) * std::log(s_hi));

  LaplaceReport rep;
  const double scale = std::pow(a, -(lambda_exp + 1));
  rep.integral = scale * core.value;
  rep.quadrature_error = scale * (core.error + tail);
  const double log_inv_a = std::log(1.0 / a);
  if (pure_gamma) {
    rep.formula = std::tgamma(lambda_exp + 1) * scale;
  } else {
    rep.formula = std::tgamma(lambda_exp + 1) * (std::log(log_inv_a) + M) * scale /
                  std::pow(log_inv_a, b);
  }
  rep.ratio = rep.integral / rep.formula;
  return rep;
}

}  // namespace semipart
