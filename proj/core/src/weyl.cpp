#include "semipart/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "semipart/arith.hpp"
#include "semipart/errors.hpp"
#include "semipart/parallel.hpp"
#include "semipart/sieve.hpp"

namespace semipart {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// frac(m * alpha) with an fma-recovered rounding residual; the phase error
// stays below 2^-50 for m up to 10^8.
long double reduced_phase(std::uint64_t m, double alpha) {
  const long double a = alpha;
  const long double v = static_cast<long double>(m);
  const long double prod = a * v;
  const long double resid = std::fma(a, v, -prod);
  long double frac = prod - std::floor(prod) + resid;
  frac -= std::floor(frac);
  return frac;
}

struct ComplexKahan {
  long double re = 0, im = 0, cre = 0, cim = 0;
  void add(long double r, long double i) {
    const long double yr = r - cre, tr = re + yr;
    cre = (tr - re) - yr;
    re = tr;
    const long double yi = i - cim, ti = im + yi;
    cim = (ti - im) - yi;
    im = ti;
  }
  std::complex<double> value() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

std::pair<long double, long double> unit_phase(std::uint64_t m, double alpha) {
  const long double th = kTwoPi * reduced_phase(m, alpha);
  return {std::cos(th), std::sin(th)};
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::complex<double> s1(double beta, std::uint64_t x) {
  if (x < 2) throw std::domain_error("s1: requires x >= 2");
  ComplexKahan acc;
  visit_primes(x, [&](std::uint64_t p) {
    const auto [c, s] = unit_phase(p, beta);
    acc.add(c, s);
  });
  return acc.value();
}

std::complex<double> s2(double alpha, std::uint64_t X) {
  const auto parts = semiprime_cache(std::max<std::uint64_t>(X, 4));
  ComplexKahan acc;
  for (const SemiprimePart& part : *parts) {
    if (part.value > X) break;
    const auto [c, s] = unit_phase(part.value, alpha);
    for (int w = 0; w < part.weight; ++w) acc.add(c, s);
  }
  return acc.value();
}

std::complex<double> s2_pair_reference(double alpha, std::uint64_t X) {
  // Enumerate ordered pairs directly, then accumulate in ascending value
  // order so the floating-point sum matches the parts-list path exactly.
  std::vector<std::uint64_t> values;
  if (X >= 4) {
    const PrimeTable small = sieve_primes(isqrt(X));
    const PrimeTable all = sieve_primes(X / 2);
    for (std::uint64_t p1 : small.primes) {
      for (std::uint64_t p2 : all.primes) {
        if (p1 * p2 > X) break;
        if (p2 < p1) continue;
        values.push_back(p1 * p2);
        if (p2 != p1) values.push_back(p1 * p2);  // the mirrored pair (p2, p1)
      }
    }
  }
  std::sort(values.begin(), values.end());
  ComplexKahan acc;
  for (std::uint64_t v : values) {
    const auto [c, s] = unit_phase(v, alpha);
    acc.add(c, s);
  }
  return acc.value();
}

RationalApprox dirichlet_approx(double alpha, std::uint64_t Q_max) {
  if (Q_max < 1) throw std::domain_error("dirichlet_approx: requires Q_max >= 1");
  RationalApprox best;
  best.alpha = alpha;

  long double x = alpha;
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  unsigned long long k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  best.a = h;
  best.q = 1;
  for (int iter = 0; iter < 128 && frac > 1e-18L; ++iter) {
    x = 1.0L / frac;
    const long double fl = std::floor(x);
    if (fl > 9e17L) break;  // effectively terminated
    const auto term = static_cast<long long>(fl);
    if (static_cast<unsigned long long>(term) > (Q_max - k_prev) / k) break;
    const long long h_next = term * h + h_prev;
    const unsigned long long k_next = static_cast<unsigned long long>(term) * k + k_prev;
    if (k_next > Q_max) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = x - fl;
  }
  best.a = h;
  best.q = k;
  best.err = static_cast<double>(
      std::fabs(static_cast<long double>(alpha) -
                static_cast<long double>(h) / static_cast<long double>(k)));
  return best;
}

double vinogradov_bound_s1(double x, double q, double upsilon) {
  const double lg = std::log(x);
  return upsilon * (x / std::sqrt(q) + std::pow(x, 0.8) + std::sqrt(x * q)) * lg * lg * lg;
}

double double_bound_s2(double X, double q) {
  const double L = std::log(X);
  return X * std::pow(q, -1.0 / 6.0) * std::pow(L, 7.0 / 3.0) +
         std::pow(X, 16.0 / 17.0) * std::pow(L, 39.0 / 17.0) +
         std::pow(X, 7.0 / 8.0) * std::pow(q, 1.0 / 8.0) * std::pow(L, 9.0 / 4.0);
}

MinimaxReport minimax_check(double X, double q) {
  if (!(X >= 16) || !(q >= 1) || !(q <= X))
    throw std::domain_error("minimax_check: requires X >= 16 and 1 <= q <= X");
  const double L = std::log(X);

  auto F = [&](double M) { return X * L * L / std::sqrt(M); };
  std::array<std::function<double(double)>, 3> G = {
      [&](double M) { return X * M * L * L * L / std::sqrt(q); },
      [&](double M) { return std::pow(X, 0.8) * L * L * L * std::pow(M, 1.2); },
      [&](double M) { return std::sqrt(X * q) * std::pow(M, 1.5) * L * L * L; },
  };

  MinimaxReport rep;
  rep.X = X;
  rep.q = q;
  rep.m_closed = {std::pow(q, 1.0 / 3.0) * std::pow(L, -2.0 / 3.0),
                  std::pow(X, 2.0 / 17.0) * std::pow(L, -10.0 / 17.0),
                  std::pow(X, 0.25) * std::pow(q, -0.25) / std::sqrt(L)};
  rep.f_closed = {X * std::pow(q, -1.0 / 6.0) * std::pow(L, 7.0 / 3.0),
                  std::pow(X, 16.0 / 17.0) * std::pow(L, 39.0 / 17.0),
                  std::pow(X, 7.0 / 8.0) * std::pow(q, 1.0 / 8.0) * std::pow(L, 9.0 / 4.0)};

  for (int i = 0; i < 3; ++i) {
    // log F - log G_i is strictly decreasing; bisect for the root.
    double lo = 1e-12, hi = X * X;
    for (int it = 0; it < 400; ++it) {
      const double mid = std::sqrt(lo * hi);
      const double diff = std::log(F(mid)) - std::log(G[static_cast<std::size_t>(i)](mid));
      (diff > 0 ? lo : hi) = mid;
      if (hi / lo < 1 + 1e-14) break;
    }
    const double root = std::sqrt(lo * hi);
    rep.m_numeric[static_cast<std::size_t>(i)] = root;
    rep.f_numeric[static_cast<std::size_t>(i)] = F(root);
    rep.max_rel_diff_m =
        std::max(rep.max_rel_diff_m,
                 std::abs(root - rep.m_closed[static_cast<std::size_t>(i)]) /
                     rep.m_closed[static_cast<std::size_t>(i)]);
    rep.max_rel_diff_f =
        std::max(rep.max_rel_diff_f,
                 std::abs(rep.f_numeric[static_cast<std::size_t>(i)] -
                          rep.f_closed[static_cast<std::size_t>(i)]) /
                     rep.f_closed[static_cast<std::size_t>(i)]);
  }

  const double m_best = *std::min_element(rep.m_closed.begin(), rep.m_closed.end());
  rep.f_at_best = F(m_best);

  // Dense log-spaced grid around the crossing points.
  const double m_lo = m_best / 100, m_hi =
      *std::max_element(rep.m_closed.begin(), rep.m_closed.end()) * 100;
  double grid_min = std::numeric_limits<double>::infinity();
  const int kGrid = 4000;
  for (int i = 0; i <= kGrid; ++i) {
    const double M = m_lo * std::pow(m_hi / m_lo, static_cast<double>(i) / kGrid);
    double H = F(M);
    for (const auto& g : G) H = std::max(H, g(M));
    grid_min = std::min(grid_min, H);
  }
  rep.grid_min = grid_min;
  return rep;
}

std::vector<WeylBoundReport> bound_ratio_sweep(std::uint64_t X, std::size_t n_samples,
                                               std::uint64_t seed, unsigned threads) {
  if (X > 100000000ull) throw BudgetError("bound_ratio_sweep: X > 1e8 exceeds the budget");
  if (X < 4) throw std::domain_error("bound_ratio_sweep: requires X >= 4");

  // Sample set: adversarial near-rationals a/q + u/q^2 first, then uniform.
  std::vector<double> alphas;
  alphas.reserve(n_samples);
  for (std::uint64_t q = 1; q <= 8 && alphas.size() < n_samples; ++q) {
    for (double u : {0.0, 0.5, -0.5}) {
      if (alphas.size() >= n_samples) break;
      const double qd = static_cast<double>(q);
      double a0 = qd == 1 ? 0.0 : 1.0;
      alphas.push_back(a0 / qd + u / (qd * qd) + (qd == 1 ? 1e-9 : 0.0));
    }
  }
  std::mt19937_64 rng(seed);
  while (alphas.size() < n_samples) alphas.push_back(uniform01(rng));

  semiprime_cache(X);  // shared read-only table for the workers
  std::vector<WeylBoundReport> reports(alphas.size());
  const std::uint64_t q_cap = isqrt(X);
  parallel_for(alphas.size(), threads, [&](std::size_t i) {
    WeylBoundReport rep;
    rep.alpha = alphas[i];
    const RationalApprox ra = dirichlet_approx(rep.alpha, q_cap);
    rep.a = ra.a;
    rep.q = ra.q;
    rep.err = ra.err;
    rep.abs_s2 = std::abs(s2(rep.alpha, X));
    rep.bound = double_bound_s2(static_cast<double>(X), static_cast<double>(ra.q));
    rep.ratio = rep.abs_s2 / rep.bound;
    reports[i] = rep;
  });
  return reports;
}

BilinearReport bilinear_check(std::uint64_t X, std::uint64_t m_cut, std::uint64_t n_cut,
                              std::size_t trials, std::uint64_t seed) {
  if (X > 1000000ull) throw BudgetError("bilinear_check: X > 1e6 exceeds the budget");
  if (m_cut < 1 || n_cut < 1)
    throw std::domain_error("bilinear_check: requires M, N >= 1");

  BilinearReport report;
  report.X = X;
  report.m_cut = m_cut;
  report.n_cut = n_cut;

  // xi = eta = 1, alpha = 0: the plain lattice count under the hyperbola.
  std::uint64_t count = 0;
  for (std::uint64_t m = m_cut + 1; m * (n_cut + 1) <= X; ++m)
    count += X / m - n_cut;
  report.unit_count = count;

  std::mt19937_64 rng(seed);
  const std::uint64_t m_hi = X / (n_cut + 1);
  std::vector<double> xi_phase(m_hi + 1), eta_phase(X / (m_cut + 1) + 1);

  report.trials.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const double alpha = uniform01(rng);
    for (double& v : xi_phase) v = uniform01(rng);
    for (double& v : eta_phase) v = uniform01(rng);

    ComplexKahan acc;
    for (std::uint64_t m = m_cut + 1; m <= m_hi; ++m) {
      const std::uint64_t n_max = X / m;
      if (n_max <= n_cut) continue;
      for (std::uint64_t n = n_cut + 1; n <= n_max; ++n) {
        const long double th =
            kTwoPi * (reduced_phase(m * n, alpha) + xi_phase[m] + eta_phase[n]);
        acc.add(std::cos(th), std::sin(th));
      }
    }

    BilinearTrial trial;
    trial.alpha = alpha;
    trial.q = dirichlet_approx(alpha, isqrt(X)).q;
    trial.abs_sum = std::abs(acc.value());
    const double Xd = static_cast<double>(X);
    const double lg = std::log(Xd);
    trial.bound = std::sqrt(Xd / static_cast<double>(m_cut) + Xd / static_cast<double>(n_cut) +
                            Xd / static_cast<double>(trial.q) + static_cast<double>(trial.q)) *
                  std::sqrt(Xd) * lg * lg;
    trial.ratio = trial.abs_sum / trial.bound;
    report.max_ratio = std::max(report.max_ratio, trial.ratio);
    report.trials.push_back(trial);
  }
  return report;
}

}  // namespace semipart
