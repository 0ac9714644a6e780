#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "semipart/arith.hpp"
#include "semipart/errors.hpp"
#include "semipart/sieve.hpp"
#include "semipart/weyl.hpp"

using namespace semipart;

TEST_SUITE("weyl") {

TEST_CASE("s1: hand values and symmetry") {
  CHECK(s1(0.0, 100).real() == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(s1(0.0, 100).imag() == doctest::Approx(0.0));

  // primes <= 10 at beta = 1/2: e(1) + 3 e(1/2) = 1 - 3.
  const auto v = s1(0.5, 10);
  CHECK(v.real() == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(0.0));

  for (double beta : {0.123, 0.618, 0.25}) {
    CHECK(std::abs(s1(beta, 1000)) ==
          doctest::Approx(std::abs(s1(-beta, 1000))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(s1(0.1, 1), std::domain_error);
}

TEST_CASE("s2: hand values and symmetry") {
  CHECK(s2(0.0, 10).real() == doctest::Approx(6.0).epsilon(1e-12));

  // weights on {4,6,9,10}: e(2) + 2 e(3) + e(4.5) + 2 e(5) = 1 + 2 - 1 + 2.
  const auto v = s2(0.5, 10);
  CHECK(v.real() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(v.imag() == doctest::Approx(0.0));

  const auto plus = s2(0.677, 5000);
  const auto minus = s2(-0.677, 5000);
  CHECK(plus.real() == doctest::Approx(minus.real()).epsilon(1e-10));
  CHECK(plus.imag() == doctest::Approx(-minus.imag()).epsilon(1e-10));
}

TEST_CASE("the two S2 enumerations agree exactly") {
  for (double alpha : {0.0, 0.6180339887498949, 0.1234567890123, 1.0 / 3.0}) {
    const auto a = s2(alpha, 10000);
    const auto b = s2_pair_reference(alpha, 10000);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
  }
}

TEST_CASE("dirichlet approximation: anchors") {
  const RationalApprox third = dirichlet_approx(1.0 / 3.0, 10);
  CHECK(third.a == 1);
  CHECK(third.q == 3);
  CHECK(third.err <= 1e-12);

  const RationalApprox root2 = dirichlet_approx(std::sqrt(2.0) - 1.0, 10);
  CHECK(root2.a == 2);
  CHECK(root2.q == 5);
  CHECK(root2.err == doctest::Approx(std::sqrt(2.0) - 1.0 - 0.4).epsilon(1e-10));

  const RationalApprox golden = dirichlet_approx(0.6180339887498949, 18);
  CHECK(golden.a == 8);
  CHECK(golden.q == 13);
}

TEST_CASE("dirichlet approximation: convergent properties on random draws") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double alpha = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const std::uint64_t q_max = 2 + rng() % 100000;
    const RationalApprox ra = dirichlet_approx(alpha, q_max);
    CHECK(ra.q <= q_max);
    CHECK(std::gcd(static_cast<std::uint64_t>(std::llabs(ra.a)), ra.q) == 1);
    CHECK(ra.err * static_cast<double>(ra.q) * static_cast<double>(ra.q) <= 1.0 + 1e-9);
  }
}

TEST_CASE("bound formulas") {
  // Upsilon = 1 reduces to the classical three-term shape.
  const double x = 1e6;
  const double lg3 = std::pow(std::log(x), 3);
  CHECK(vinogradov_bound_s1(x, 25.0, 1.0) ==
        doctest::Approx((x / 5.0 + std::pow(x, 0.8) + std::sqrt(x * 25.0)) * lg3));
  // q = x: the sqrt(x q) term alone already dominates the trivial bound.
  CHECK(vinogradov_bound_s1(x, x, 1.0) >= x);

  // q = 1: the first term dominates the other two at X = 1e6.
  const double X = 1e6;
  const double L = std::log(X);
  const double t1 = X * std::pow(L, 7.0 / 3.0);
  const double t2 = std::pow(X, 16.0 / 17.0) * std::pow(L, 39.0 / 17.0);
  const double t3 = std::pow(X, 7.0 / 8.0) * std::pow(L, 9.0 / 4.0);
  CHECK(double_bound_s2(X, 1.0) == doctest::Approx(t1 + t2 + t3));
  CHECK(t1 > t2 + t3);

  // Monotone in X at fixed q.
  for (double q : {1.0, 100.0}) {
    double prev = 0;
    for (double Xs : {1e4, 1e5, 1e6, 1e7}) {
      const double b = double_bound_s2(Xs, q);
      CHECK(b > prev);
      prev = b;
    }
  }
}

TEST_CASE("s1 stays far below its bound on random frequencies") {
  std::mt19937_64 rng(17);
  const std::uint64_t x = 100000;
  double max_ratio = 0;
  for (int i = 0; i < 20; ++i) {
    const double beta = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const RationalApprox ra = dirichlet_approx(beta, isqrt(x));
    const double bound =
        vinogradov_bound_s1(static_cast<double>(x), static_cast<double>(ra.q), 1.0);
    max_ratio = std::max(max_ratio, std::abs(s1(beta, x)) / bound);
  }
  CHECK(max_ratio > 0);
  CHECK(max_ratio <= 1.0);  // recorded; the implied constant is generous here
}

TEST_CASE("first and third bound terms cross where the algebra says") {
  const double X = 1e6;
  const double L = std::log(X);
  // X q^{-1/6} L^{7/3} = X^{7/8} q^{1/8} L^{9/4}  <=>  q = X^{3/7} L^{2/7}.
  double lo = 1.0, hi = X;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    const double diff = std::log(X) - std::log(mid) / 6 + 7.0 / 3.0 * std::log(L) -
                        (7.0 / 8.0 * std::log(X) + std::log(mid) / 8 +
                         9.0 / 4.0 * std::log(L));
    (diff > 0 ? lo : hi) = mid;
  }
  const double crossing = std::sqrt(lo * hi);
  const double closed = std::pow(X, 3.0 / 7.0) * std::pow(L, 2.0 / 7.0);
  CHECK(crossing == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("minimax crossings match their closed forms") {
  const MinimaxReport rep = minimax_check(1e6, 100.0);
  CHECK(rep.max_rel_diff_m <= 1e-6);
  CHECK(rep.max_rel_diff_f <= 1e-6);
  CHECK(rep.grid_min >= rep.f_at_best * (1 - 1e-3));
  CHECK(rep.grid_min <= rep.f_at_best * (1 + 1e-2));

  // Relabeling the G's cannot change the grid minimum (recompute directly).
  const double L = std::log(1e6);
  const double q = 100.0;
  auto F = [&](double M) { return 1e6 * L * L / std::sqrt(M); };
  auto G1 = [&](double M) { return 1e6 * M * L * L * L / std::sqrt(q); };
  auto G2 = [&](double M) { return std::pow(1e6, 0.8) * L * L * L * std::pow(M, 1.2); };
  auto G3 = [&](double M) { return std::sqrt(1e6 * q) * std::pow(M, 1.5) * L * L * L; };
  double min_a = 1e300, min_b = 1e300;
  for (int i = 0; i <= 2000; ++i) {
    const double M = 1e-4 * std::pow(1e8, i / 2000.0);
    min_a = std::min(min_a, std::max({F(M), G1(M), G2(M), G3(M)}));
    min_b = std::min(min_b, std::max({F(M), G3(M), G1(M), G2(M)}));
  }
  CHECK(min_a == min_b);
  CHECK_THROWS_AS(minimax_check(8.0, 1.0), std::domain_error);
}

TEST_CASE("bound-ratio sweep: determinism, triangle inequality, major-arc anchor") {
  const std::uint64_t X = 10000;
  const auto a = bound_ratio_sweep(X, 50, 42, 1);
  const auto b = bound_ratio_sweep(X, 50, 42, 2);
  REQUIRE(a.size() == 50);
  REQUIRE(b.size() == 50);
  const double pi2 = static_cast<double>(pi2_star(X));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].alpha == b[i].alpha);
    CHECK(a[i].abs_s2 == b[i].abs_s2);  // thread count changes nothing
    CHECK(a[i].abs_s2 <= pi2 * (1 + 1e-9));
    CHECK(a[i].ratio >= 0);
  }
  // The first adversarial sample sits next to 0: near-full coherence.
  CHECK(a[0].abs_s2 >= 0.99 * pi2);

  const auto c = bound_ratio_sweep(X, 50, 43, 1);
  bool any_different = false;
  for (std::size_t i = 0; i < c.size(); ++i) any_different |= c[i].alpha != a[i].alpha;
  CHECK(any_different);  // seed participates
  CHECK_THROWS_AS(bound_ratio_sweep(200000000ull, 10, 1, 1), BudgetError);
}

TEST_CASE("bilinear check: count oracle, symmetry, budget") {
  const BilinearReport rep = bilinear_check(10000, 10, 10, 3, 5);

  // Independent double-loop count oracle for the xi = eta = 1, alpha = 0 sum.
  std::uint64_t oracle = 0;
  for (std::uint64_t m = 11; m <= 10000; ++m)
    for (std::uint64_t n = 11; m * n <= 10000; ++n) ++oracle;
  CHECK(rep.unit_count == oracle);

  REQUIRE(rep.trials.size() == 3);
  for (const auto& trial : rep.trials) {
    CHECK(trial.bound > 0);
    CHECK(trial.ratio >= 0);
  }

  // The bound is symmetric under swapping the cuts.
  const double Xd = 10000, lg = std::log(Xd);
  auto bound = [&](double M, double N, double q) {
    return std::sqrt(Xd / M + Xd / N + Xd / q + q) * std::sqrt(Xd) * lg * lg;
  };
  CHECK(bound(10, 40, 7) == bound(40, 10, 7));

  CHECK_THROWS_AS(bilinear_check(2000000, 10, 10, 1, 1), BudgetError);
}

}  // TEST_SUITE
