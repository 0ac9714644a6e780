#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace semipart {

/// Continued-fraction convergent a/q of alpha with q <= Q_max;
/// err = |alpha - a/q| <= 1/(q q_next) <= 1/q^2.
struct RationalApprox {
  double alpha = 0;
  long long a = 0;
  unsigned long long q = 1;
  double err = 0;
};

/// S1(beta, x) = sum_{p <= x} e(beta p), direct summation over the sieve.
std::complex<double> s1(double beta, std::uint64_t x);

/// S2(alpha, X) = sum over semiprime parts of w2(m) e(alpha m)
/// (= the sum over ordered prime pairs p1 p2 <= X).
std::complex<double> s2(double alpha, std::uint64_t X);

/// Independent enumeration of the same sum by the double loop over prime
/// pairs; value-identical to s2 by construction of the summation order.
std::complex<double> s2_pair_reference(double alpha, std::uint64_t X);

/// Best continued-fraction convergent with denominator <= Q_max.
RationalApprox dirichlet_approx(double alpha, std::uint64_t Q_max);

/// Upsilon (x/sqrt(q) + x^{4/5} + sqrt(x q)) (log x)^3, constant taken as 1.
double vinogradov_bound_s1(double x, double q, double upsilon);

/// X q^{-1/6} L^{7/3} + X^{16/17} L^{39/17} + X^{7/8} q^{1/8} L^{9/4}
/// with L = log X, constant taken as 1.
double double_bound_s2(double X, double q);

/// Check of the minimax structure behind the double-sum bound:
/// F(M) = X L^2 / sqrt(M) against G1 = X M L^3 / sqrt(q),
/// G2 = X^{4/5} L^3 M^{6/5}, G3 = sqrt(X q) M^{3/2} L^3.
struct MinimaxReport {
  double X = 0, q = 0;
  std::array<double, 3> m_closed{}, m_numeric{};   // crossing points
  std::array<double, 3> f_closed{}, f_numeric{};   // F at the crossings
  double max_rel_diff_m = 0;                       // closed vs numeric M_i
  double max_rel_diff_f = 0;                       // closed vs numeric F(M_i)
  double grid_min = 0;                             // min over grid of max{F, G_i}
  double f_at_best = 0;                            // F(min M_i)
};
MinimaxReport minimax_check(double X, double q);

struct WeylBoundReport {
  double alpha = 0;
  long long a = 0;
  std::uint64_t q = 1;
  double err = 0;
  double abs_s2 = 0;
  double bound = 0;
  double ratio = 0;
};

/// Samples uniform alphas plus adversarial near-rationals a/q + u/q^2,
/// approximating each with Q_max = floor(sqrt(X)); deterministic under
/// seed, sample-parallel with order-fixed output.
std::vector<WeylBoundReport> bound_ratio_sweep(std::uint64_t X, std::size_t n_samples,
                                               std::uint64_t seed, unsigned threads = 1);

struct BilinearTrial {
  double alpha = 0;
  std::uint64_t q = 1;
  double abs_sum = 0;
  double bound = 0;
  double ratio = 0;
};

struct BilinearReport {
  std::uint64_t X = 0, m_cut = 0, n_cut = 0;
  std::uint64_t unit_count = 0;  // the alpha=0, xi=eta=1 double sum (a count)
  double max_ratio = 0;
  std::vector<BilinearTrial> trials;
};

/// Bilinear double sums sum_{mn<=X, m>M, n>N} xi_m eta_n e(alpha m n) with
/// random unit-modulus coefficients, against the bound
/// (X/M + X/N + X/q + q)^{1/2} X^{1/2} (log X)^2. Budget: X <= 10^6.
BilinearReport bilinear_check(std::uint64_t X, std::uint64_t m_cut, std::uint64_t n_cut,
                              std::size_t trials, std::uint64_t seed);

}  // namespace semipart
