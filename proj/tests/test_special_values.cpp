#include <doctest.h>
#include <quadmath.h>

#include <cmath>
#include <vector>

#include "semipart/sieve.hpp"
#include "semipart/special_values.hpp"

using namespace semipart;

namespace {

double qabs_diff(const PrecisionReal& a, const PrecisionReal& b) {
  return static_cast<double>(fabsq(a.value - b.value));
}

// Direct-sum oracle for zeta(s): head + integral tail + midpoint term.
long double zeta_direct(long double s, std::uint64_t N) {
  long double sum = 0;
  for (std::uint64_t n = N; n >= 1; --n) sum += std::pow((long double)n, -s);
  return sum + std::pow((long double)N, 1 - s) / (s - 1) - 0.5L * std::pow((long double)N, -s);
}

// Direct prime-sum oracle over p <= 1e6 with the pi(t) <= 1.26 t/log t tail.
struct PrimeSum {
  long double value;
  double tail;
};
PrimeSum prime_sum(double s) {
  static const PrimeTable table = sieve_primes(1000000);
  long double sum = 0;
  for (auto it = table.primes.rbegin(); it != table.primes.rend(); ++it)
    sum += std::pow((long double)*it, (long double)-s);
  const double P = 1e6;
  return {sum, 1.26 * s / std::log(P) * std::pow(P, 1.0 - s) / (s - 1.0)};
}

// Omega(n) sieve up to 1e6 for the almost-prime direct sums.
const std::vector<unsigned char>& omega_counts() {
  static const std::vector<unsigned char> counts = [] {
    const std::size_t limit = 1000000;
    std::vector<unsigned char> omega(limit + 1, 0);
    std::vector<std::uint32_t> rest(limit + 1);
    for (std::size_t i = 0; i <= limit; ++i) rest[i] = static_cast<std::uint32_t>(i);
    for (std::size_t p = 2; p <= limit; ++p) {
      if (omega[p] != 0 || rest[p] != p) continue;  // not prime
      for (std::size_t m = p; m <= limit; m += p)
        while (rest[m] % p == 0) {
          rest[m] /= p;
          ++omega[m];
        }
    }
    return omega;
  }();
  return counts;
}

long double almost_prime_direct(int k, double s) {
  const auto& omega = omega_counts();
  long double sum = 0;
  for (std::size_t n = omega.size() - 1; n >= 2; --n)
    if (omega[n] == k) sum += std::pow((long double)n, (long double)-s);
  return sum;
}

}  // namespace

TEST_SUITE("special_values") {

TEST_CASE("riemann zeta closed forms") {
  const double pi = std::acos(-1.0);
  CHECK(std::abs(riemann_zeta(2).val() - pi * pi / 6) <= 1e-12);
  CHECK(std::abs(riemann_zeta(4).val() - pi * pi * pi * pi / 90) <= 1e-12);
  CHECK(riemann_zeta(2).err() <= 1e-12);
  CHECK_THROWS_AS(riemann_zeta(1.0), std::domain_error);
}

TEST_CASE("riemann zeta s=1.5 against the direct-sum oracle") {
  const long double direct = zeta_direct(1.5L, 200000);
  CHECK(std::abs(riemann_zeta(1.5).val() - (double)direct) <= 1e-9);
}

TEST_CASE("prime zeta dual routes") {
  for (double s : {1.5, 2.0, 3.0, 4.0}) {
    const PrecisionReal pz = prime_zeta(s);
    const PrimeSum direct = prime_sum(s);
    CHECK(std::abs(pz.val() - (double)direct.value) <= pz.err() + direct.tail + 1e-15);
  }
  CHECK_THROWS_AS(prime_zeta(0.9), std::domain_error);
}

TEST_CASE("prime zeta at large s is dominated by p = 2") {
  const double pz10 = prime_zeta(10).val();
  const double two_terms = std::pow(2.0, -10) + std::pow(3.0, -10);
  CHECK(std::abs(pz10 - two_terms) <= 3 * std::pow(5.0, -10));
  CHECK(prime_zeta(40).val() / std::pow(2.0, -40) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("euler gamma") {
  CHECK(std::abs(euler_gamma().val() - 0.5772156649015328606) <= 1e-15);
  CHECK(euler_gamma().err() <= 1e-30);
}

TEST_CASE("froberg constant") {
  const PrecisionReal D = froberg_D();
  CHECK(std::abs(D.val() - 0.315718452) <= 1e-8);
  CHECK(prime_zeta(2).val() / 2 < D.val());  // positive-term lower bound

  // Cross-check: D = sum_p -(log(1 - 1/p) + 1/p) + tail.
  static const PrimeTable table = sieve_primes(1000000);
  long double sum = 0;
  for (auto it = table.primes.rbegin(); it != table.primes.rend(); ++it) {
    const long double p = static_cast<long double>(*it);
    sum += -(std::log(1 - 1 / p) + 1 / p);
  }
  CHECK(std::abs(D.val() - (double)sum) <= 2e-7);
}

TEST_CASE("meissel-mertens constant") {
  const PrecisionReal M = meissel_mertens();
  CHECK(std::abs(M.val() - 0.26149721) <= 1e-6);

  // Defining identity as implemented: M + D = gamma within bounds.
  const PrecisionReal D = froberg_D();
  const PrecisionReal g = euler_gamma();
  CHECK(static_cast<double>(fabsq(M.value + D.value - g.value)) <=
        M.err() + D.err() + g.err() + 1e-30);

  // Definitional bracket from the prime sum.
  static const PrimeTable table = sieve_primes(1000000);
  long double corr = 0;
  for (auto it = table.primes.rbegin(); it != table.primes.rend(); ++it) {
    const long double p = static_cast<long double>(*it);
    corr += std::log(1 - 1 / p) + 1 / p;
  }
  const double approx_M = g.val() + (double)corr;
  CHECK(std::abs(M.val() - approx_M) <= 2e-7);
}

TEST_CASE("error bounds are honest under doubled depth") {
  struct Probe {
    PrecisionReal shallow, deep;
  };
  const std::vector<Probe> probes = {
      {euler_gamma(1), euler_gamma(2)},
      {riemann_zeta(1.5, 1), riemann_zeta(1.5, 2)},
      {riemann_zeta(2.0, 1), riemann_zeta(2.0, 2)},
      {prime_zeta(1.5, 1), prime_zeta(1.5, 2)},
      {prime_zeta(2.0, 1), prime_zeta(2.0, 2)},
      {froberg_D(1), froberg_D(2)},
      {meissel_mertens(1), meissel_mertens(2)},
  };
  for (const Probe& p : probes)
    CHECK(qabs_diff(p.shallow, p.deep) <=
          p.shallow.err() + p.deep.err() + 1e-33);
}

TEST_CASE("almost-prime zeta: reduction and direct sums") {
  CHECK(qabs_diff(almost_prime_zeta(1, 2.0), prime_zeta(2.0)) <= 1e-30);

  const PrecisionReal pz2 = prime_zeta(2.0);
  const PrecisionReal pz4 = prime_zeta(4.0);
  const double expected_k2 = 0.5 * (pz2.val() * pz2.val() + pz4.val());
  CHECK(almost_prime_zeta(2, 2.0).val() == doctest::Approx(expected_k2).epsilon(1e-12));

  for (int k : {2, 3}) {
    const double direct = (double)almost_prime_direct(k, 2.0);
    const double tail = 1e-6;  // sum_{n > 1e6} n^{-2}
    CHECK(std::abs(almost_prime_zeta(k, 2.0).val() - direct) <= tail + 1e-12);
  }

  CHECK_THROWS_AS(almost_prime_zeta(0, 2.0), std::domain_error);
  CHECK_THROWS_AS(almost_prime_zeta(9, 2.0), std::domain_error);
  CHECK_THROWS_AS(almost_prime_zeta(2, 1.0), std::domain_error);
}

TEST_CASE("almost-prime zeta is positive and decreasing in s") {
  for (int k : {2, 3, 4}) {
    double prev = 1e300;
    for (double s : {1.5, 2.0, 2.5, 3.0}) {
      const double v = almost_prime_zeta(k, s).val();
      CHECK(v > 0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("theorem constants") {
  const TheoremConstants t1 = theorem_constants(0.5, Variant::theorem1);
  CHECK(t1.c2.val() == doctest::Approx(-0.43165).epsilon(1e-4));
  CHECK(t1.c4.val() == doctest::Approx(2 * std::acos(-1.0) / std::sqrt(3.0)).epsilon(1e-12));

  const TheoremConstants t72_unit = theorem_constants(1.0, Variant::theorem72);
  const double four_zeta2 = 4 * riemann_zeta(2).val();
  CHECK(t72_unit.c3.val() == doctest::Approx(2 * std::sqrt(four_zeta2)).epsilon(1e-12));

  // The two c3 displays disagree at lambda = 1/2; both are exposed.
  const TheoremConstants t72_half = theorem_constants(0.5, Variant::theorem72);
  CHECK(t72_half.c3.val() == doctest::Approx(2 * t1.c3.val()).epsilon(1e-12));

  CHECK_THROWS_AS(theorem_constants(-1.0, Variant::theorem1), std::domain_error);
}

}  // TEST_SUITE
