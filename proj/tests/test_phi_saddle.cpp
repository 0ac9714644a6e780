#include <doctest.h>

#include <cmath>
#include <complex>

#include "semipart/errors.hpp"
#include "semipart/partitions.hpp"
#include "semipart/phi.hpp"
#include "semipart/saddle.hpp"
#include "semipart/special_values.hpp"

using namespace semipart;

TEST_SUITE("phi_saddle") {

TEST_CASE("phi domain and axis behaviour") {
  CHECK_THROWS_AS(phi_p2(1.0, 0.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(phi_p2(-0.1, 0.0, 1e-9), std::domain_error);
  const PhiEvaluation on_axis = phi_p2(0.95, 0.0, 1e-10);
  CHECK(on_axis.value.imag() == 0.0L);
  CHECK(on_axis.value.real() > 0.0L);
  CHECK(on_axis.tail_bound <= 1e-10L);
}

TEST_CASE("additivity of the configured Phi") {
  const double rho = std::exp(-1.0 / 30.0);
  const PhiEvaluation combined = phi_config(WeightConfig::p2(), rho, 0.3, 1e-10);
  const PhiEvaluation a = phi_p2(rho, 0.3, 1e-11);
  const PhiEvaluation b = phi_p2sq(rho, 0.3, 1e-11);
  const auto expected = 0.5L * a.value + 0.5L * b.value;
  CHECK(std::abs(combined.value.real() - expected.real()) <= 1e-9);
  CHECK(std::abs(combined.value.imag() - expected.imag()) <= 1e-9);
}

TEST_CASE("conjugate symmetry in alpha") {
  const double rho = std::exp(-1.0 / 25.0);
  for (double alpha : {0.1, 0.37, 0.49}) {
    const PhiEvaluation plus = phi_p2(rho, alpha, 1e-11);
    const PhiEvaluation minus = phi_p2(rho, -alpha, 1e-11);
    CHECK(double(plus.value.real()) == doctest::Approx(double(minus.value.real())).epsilon(1e-12));
    CHECK(double(plus.value.imag()) ==
          doctest::Approx(-double(minus.value.imag())).epsilon(1e-12));
  }
}

TEST_CASE("coarse and fine truncations agree within their tails") {
  const double rho = std::exp(-1.0 / 20.0);
  const PhiEvaluation coarse = phi_p2(rho, 0.0, 5e-3);
  const PhiEvaluation fine = phi_p2(rho, 0.0, 1e-12);
  CHECK(std::abs(double(coarse.value.real() - fine.value.real())) <=
        double(coarse.tail_bound + fine.tail_bound));
}

TEST_CASE("off-axis modulus drops below the axis value") {
  const double rho = std::exp(-1.0 / 12.0);
  const PhiEvaluation axis = phi_p2(rho, 0.0, 1e-10);
  const PhiEvaluation half = phi_p2(rho, 0.5, 1e-10);
  CHECK(std::abs(half.value) < axis.value.real());
}

TEST_CASE("phi against the leading moment term at X = 50") {
  const double X = 50;
  const double exact = phi_moment_exact(0, X, WeightConfig::p2_sharp());
  const double leading = phi_moment_asymptotic(0, X, WeightConfig::p2_sharp());
  CHECK(exact / leading >= 0.5);
  CHECK(exact / leading <= 2.0);

  // The square-parts side against its own leading term.
  const WeightConfig squares_only = WeightConfig::custom({0, 1}, {1, 1});
  const double sq_exact = phi_moment_exact(0, X, squares_only);
  const double sq_leading = phi_moment_asymptotic(0, X, squares_only);
  CHECK(sq_exact / sq_leading >= 0.5);
  CHECK(sq_exact / sq_leading <= 2.0);
}

TEST_CASE("phi vanishes as rho -> 0") {
  const PhiEvaluation tiny = phi_p2sq(0.001, 0.0, 1e-14);
  CHECK(double(tiny.value.real()) <= 2e-12);  // leading term rho^4
  CHECK(double(tiny.value.real()) > 0);
}

TEST_CASE("moment plumbing") {
  CHECK_THROWS_AS(phi_moment_exact(4, 50.0, WeightConfig::p2()), std::invalid_argument);
  CHECK_THROWS_AS(phi_moment_asymptotic(0, 2.0, WeightConfig::p2()), std::domain_error);

  // m = 0 equals the on-axis Phi evaluation.
  const double X = 40;
  const double m0 = phi_moment_exact(0, X, WeightConfig::p2());
  const PhiEvaluation direct = phi_config(WeightConfig::p2(), std::exp(-1.0 / X), 0.0, 1e-10);
  CHECK(m0 == doctest::Approx(double(direct.value.real())).epsilon(1e-8));
}

TEST_CASE("moment ratios follow the factorial-and-X law") {
  const WeightConfig config = WeightConfig::p2_sharp();
  const double r1 = phi_moment_exact(1, 100, config) / phi_moment_asymptotic(1, 100, config);
  CHECK(r1 >= 0.5);
  CHECK(r1 <= 2.0);

  const double X = 1000;
  const double ratio21 = phi_moment_exact(2, X, config) / phi_moment_exact(1, X, config);
  CHECK(ratio21 == doctest::Approx(2 * X).epsilon(0.25));

  // For the pure lambda part the closed-form ratio is exactly 2X.
  CHECK(phi_moment_asymptotic(2, X, config) / phi_moment_asymptotic(1, X, config) ==
        doctest::Approx(2 * X).epsilon(1e-12));

  // Plug-in at X = e^e where loglog X = 1.
  const double Xe = std::exp(std::exp(1.0));
  static const double zeta2 = riemann_zeta(2).val();
  static const double M = meissel_mertens().val();
  CHECK(phi_moment_asymptotic(0, Xe, config) ==
        doctest::Approx(2 * zeta2 * Xe * (M + 1) / std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("moment bracket across m and X") {
  const WeightConfig config = WeightConfig::p2_sharp();
  for (double X : {100.0, 1000.0}) {
    for (int m = 0; m <= 2; ++m) {
      const double lo = phi_moment_exact(m, X, config);
      const double hi = phi_moment_exact(m + 1, X, config);
      CHECK(hi / lo >= (m + 1) * X / 2);
      CHECK(hi / lo <= 2 * (m + 1) * X);
    }
  }
}

TEST_CASE("saddle solver meets its residual contract") {
  for (const WeightConfig& config :
       {WeightConfig::p2(), WeightConfig::p2_distinct(), WeightConfig::p2_sharp()}) {
    const SaddleSolution sol = solve_saddle(5000, config);
    const double residual = phi_moment_exact(1, sol.X, config) - 5000.0;
    CHECK(std::abs(residual) <= 1e-6 * 5000.0);
    for (double moment : sol.phi_moments) CHECK(moment > 0);
  }
  CHECK_THROWS_AS(solve_saddle(3, WeightConfig::p2()), std::domain_error);
  CHECK(solve_saddle(4, WeightConfig::p2()).X > 0);
}

TEST_CASE("saddle map is monotone in n") {
  const WeightConfig config = WeightConfig::p2();
  double prev = 0;
  for (std::uint64_t n : {100ull, 1000ull, 10000ull}) {
    const double X = solve_saddle(n, config).X;
    CHECK(X > prev);
    prev = X;

    // Finite-difference slope of the saddle map at the solution.
    const double here = phi_moment_exact(1, X, config);
    const double there = phi_moment_exact(1, X * 1.01, config);
    CHECK(there > here);
  }
}

TEST_CASE("closed-form X tracks the solver") {
  CHECK(closed_form_X(1000000, 0.5) > 0);
  CHECK_THROWS_AS(closed_form_X(4, 1.0), std::domain_error);

  // lambda scaling: X(n, 1/2) is the lambda = 1 formula at 2n.
  CHECK(closed_form_X(5000, 0.5) == closed_form_X(10000, 1.0));

  // Solver-pinned ratios: 1.0169, 1.0042, 0.9955 -- the ratio crosses 1
  // between 1e5 and 1e6, so only the distance to the first point shrinks.
  const WeightConfig config = WeightConfig::p2();
  const double expected[3] = {1.016862, 1.004186, 0.995527};
  const std::uint64_t ns[3] = {10000, 100000, 1000000};
  double gap0 = 0;
  for (int i = 0; i < 3; ++i) {
    const double ratio = solve_saddle(ns[i], config).X / closed_form_X(ns[i], 0.5);
    CHECK(ratio == doctest::Approx(expected[i]).epsilon(1e-4));
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);
    if (i == 0)
      gap0 = std::abs(ratio - 1);
    else
      CHECK(std::abs(ratio - 1) < gap0);
  }
}

TEST_CASE("saddle estimate against the exact count at n = 5000") {
  const WeightConfig config = WeightConfig::p2();
  const PartitionSeries series = partition_series(config, 5001);
  const SaddleEstimates est = saddle_estimates(5000, config);
  const double ratio = std::exp(est.log_estimate - series.log_at(5000));
  CHECK(ratio > 0.5);
  CHECK(ratio < 2.0);

  // Difference consistency: the two log estimates differ by exactly log X.
  CHECK(est.log_estimate - est.log_difference_estimate ==
        doctest::Approx(std::log(est.solution.X)).epsilon(1e-14));

  const double diff_exact =
      std::log(mpz_class(series.counts[5001] - series.counts[5000]).get_d()) -
      series.log_at(5000);
  const double diff_est = est.log_difference_estimate - series.log_at(5000);
  CHECK(std::exp(diff_est - diff_exact) > 0.5);
  CHECK(std::exp(diff_est - diff_exact) < 2.0);
}

TEST_CASE("saddle estimate grows with n") {
  const WeightConfig config = WeightConfig::p2();
  double prev = -1e300;
  for (std::uint64_t n : {100ull, 500ull, 2000ull, 10000ull, 20000ull}) {
    const double est = saddle_estimate(n, config);
    CHECK(est > prev);
    prev = est;
  }
  CHECK_THROWS_AS(saddle_estimate(15, config), std::domain_error);
}

TEST_CASE("laplace integral law") {
  const LaplaceReport r1 = laplace_check(1e-4, 1.0, 1.0, 2.0);
  // Quadrature-pinned value; inside the [0.8, 1.2] window.
  CHECK(r1.ratio == doctest::Approx(0.976309).epsilon(5e-4));
  CHECK(r1.ratio > 0.8);
  CHECK(r1.ratio < 1.2);
  CHECK(r1.quadrature_error <= 1e-4 * std::abs(r1.integral));

  const LaplaceReport fine = laplace_check(1e-6, 1.0, 1.0, 2.0);
  const LaplaceReport coarse = laplace_check(1e-3, 1.0, 1.0, 2.0);
  CHECK(std::abs(fine.ratio - 1) < std::abs(coarse.ratio - 1));

  const LaplaceReport gamma_only = laplace_check(1e-6, 1.5, 0.0, 1.5, /*pure_gamma=*/true);
  CHECK(gamma_only.ratio == doctest::Approx(1.0).epsilon(1e-4));

  CHECK_THROWS_AS(laplace_check(0.5, 1.0, 1.0, 2.0), std::domain_error);
}

}  // TEST_SUITE
