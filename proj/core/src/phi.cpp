#include "semipart/phi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semipart/arith.hpp"
#include "semipart/errors.hpp"
#include "semipart/sieve.hpp"
#include "semipart/special_values.hpp"

namespace semipart {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// frac(m * alpha) with the product formed in long double and the rounding
// residual recovered by fma, so the phase error stays below 2^-50 even for
// m near 10^8.
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
};

// sum_{v > P} e^{-v y} <= e^{-(P+1) y} / (1 - e^{-y}) <= e^{-P y} (1/y + 1).
// Part-tail over j <= J with per-j part cap P1/j (all integers >= 4, weight
// <= 2, extra factor v^m for moments):
//   sum_{j<=J} j^{m-1} * 2 (P1/j)^m e^{-P1/X} (2X/j + 1)
//   <= 2 P1^m e^{-P1/X} (2 X zeta(2) + 1 + ln J).
long double part_tail_bound(long double P1, long double X, int m, std::uint64_t J) {
  const long double lnJ = std::log(static_cast<long double>(J) + 1);
  return 2 * std::pow(P1, m) * std::exp(-P1 / X) * (2 * X * 1.6449340668482264L + 1 + lnJ);
}

// j-tail over j > J (all parts >= 4):
//   sum_{v>=4} v^m e^{-v y} <= (2m/(e y))^m e^{-2 y} (2/y + 1)   [split e^{-vy/2}]
//   => tail <= 2 (2mX/e)^m (2X/J + 1) (1/J) (X/2 + 1) e^{-2J/X}.
long double j_tail_bound(long double X, int m, std::uint64_t J) {
  const long double Jl = static_cast<long double>(J);
  const long double scale = m == 0 ? 1.0L : std::pow(2 * m * X / 2.718281828459045L, m);
  return 2 * scale * (2 * X / Jl + 1) / Jl * (X / 2 + 1) * std::exp(-2 * Jl / X);
}

struct Truncation {
  std::uint64_t P1;
  std::uint64_t J;
  long double tail;
};

// Picks part and j budgets so the certified tail is below target.
Truncation choose_truncation(long double X, int m, double target) {
  constexpr std::uint64_t kMaxP = 1ull << 33;
  constexpr std::uint64_t kMaxJ = 1ull << 27;
  std::uint64_t P1 = static_cast<std::uint64_t>(X * (30 + 8 * m)) + 64;
  std::uint64_t J = static_cast<std::uint64_t>(std::max(64.0L, 16 * X)) + 1;
  if (m > 0) P1 = std::max<std::uint64_t>(P1, static_cast<std::uint64_t>(2 * m * X) + 1);
  long double pt = part_tail_bound(P1, X, m, J), jt = j_tail_bound(X, m, J);
  int guard = 0;
  while (pt + jt > target) {
    if (pt > jt) {
      if (P1 >= kMaxP) throw BudgetError("phi: part budget exhausted", double(pt + jt));
      P1 *= 2;
    } else {
      if (J >= kMaxJ) throw BudgetError("phi: j budget exhausted", double(pt + jt));
      J *= 2;
    }
    pt = part_tail_bound(P1, X, m, J);
    jt = j_tail_bound(X, m, J);
    if (++guard > 90) throw BudgetError("phi: unreachable precision", double(pt + jt));
  }
  return {P1, J, pt + jt};
}

enum class PartKind { semiprimes, squares };

PhiEvaluation phi_eval(PartKind kind, double rho, double alpha, double target) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("phi: requires 0 < rho < 1");
  if (!(target > 0.0)) throw std::domain_error("phi: precision target must be positive");
  const long double X = -1.0L / std::log(static_cast<long double>(rho));
  const Truncation tr = choose_truncation(X, 0, target);

  std::shared_ptr<const std::vector<SemiprimePart>> cache;
  std::vector<std::uint64_t> squares;
  if (kind == PartKind::semiprimes) {
    cache = semiprime_cache(tr.P1);
  } else {
    const PrimeTable pt = sieve_primes(std::max<std::uint64_t>(isqrt(tr.P1), 2));
    for (std::uint64_t p : pt.primes)
      if (p * p <= tr.P1) squares.push_back(p * p);
  }

  ComplexKahan acc;
  const bool on_axis = alpha == 0.0;
  for (std::uint64_t j = 1; j <= tr.J; ++j) {
    const std::uint64_t cap = tr.P1 / j;
    if (cap < 4) break;
    const long double inv_j = 1.0L / static_cast<long double>(j);
    auto emit = [&](std::uint64_t v, int w) {
      const long double radial = w * inv_j * std::exp(-static_cast<long double>(v) *
                                                       static_cast<long double>(j) / X);
      if (on_axis) {
        acc.add(radial, 0.0L);
      } else {
        const long double theta = kTwoPi * reduced_phase(v * j, alpha);
        acc.add(radial * std::cos(theta), radial * std::sin(theta));
      }
    };
    if (kind == PartKind::semiprimes) {
      for (const SemiprimePart& part : *cache) {
        if (part.value > cap) break;
        emit(part.value, part.weight);
      }
    } else {
      for (std::uint64_t sq : squares) {
        if (sq > cap) break;
        emit(sq, 1);
      }
    }
  }

  PhiEvaluation out;
  out.rho = rho;
  out.alpha = alpha;
  out.value = {acc.re, on_axis ? 0.0L : acc.im};
  out.truncation_j = tr.J;
  out.part_limit = tr.P1;
  out.tail_bound = tr.tail;
  return out;
}

}  // namespace

PhiEvaluation phi_p2(double rho, double alpha, double precision_target) {
  return phi_eval(PartKind::semiprimes, rho, alpha, precision_target);
}

PhiEvaluation phi_p2sq(double rho, double alpha, double precision_target) {
  return phi_eval(PartKind::squares, rho, alpha, precision_target);
}

PhiEvaluation phi_config(const WeightConfig& config, double rho, double alpha,
                         double precision_target) {
  const double lam = config.lambda_real();
  const double mu = config.mu_real();
  PhiEvaluation out;
  out.rho = rho;
  out.alpha = alpha;
  if (lam != 0.0) {
    const PhiEvaluation a = phi_p2(rho, alpha, precision_target / (2 * std::abs(lam)));
    out.value += static_cast<long double>(lam) * a.value;
    out.tail_bound += std::abs(lam) * a.tail_bound;
    out.truncation_j = std::max(out.truncation_j, a.truncation_j);
    out.part_limit = std::max(out.part_limit, a.part_limit);
  }
  if (mu != 0.0) {
    const PhiEvaluation b = phi_p2sq(rho, alpha, precision_target / (2 * std::abs(mu)));
    out.value += static_cast<long double>(mu) * b.value;
    out.tail_bound += std::abs(mu) * b.tail_bound;
    out.truncation_j = std::max(out.truncation_j, b.truncation_j);
    out.part_limit = std::max(out.part_limit, b.part_limit);
  }
  return out;
}

double phi_moment_exact(int m, double X, const WeightConfig& config, double rel_target) {
  if (m < 0 || m > 3)
    throw std::invalid_argument("phi_moment_exact: only moments m in 0..3 are supported");
  if (!(X > 0)) throw std::domain_error("phi_moment_exact: requires X > 0");

  const double lam = config.lambda_real();
  const double mu = config.mu_real();

  // Two passes: accumulate with a provisional truncation, then make sure
  // the certified tail is below rel_target * |value|.
  double abs_target = rel_target;  // refined after the first pass
  for (int pass = 0; pass < 8; ++pass) {
    const Truncation tr = choose_truncation(static_cast<long double>(X), m, abs_target);
    long double sum = 0, comp = 0;
    auto kadd = [&](long double t) {
      const long double y = t - comp, u = sum + y;
      comp = (u - sum) - y;
      sum = u;
    };

    auto cache = lam != 0.0 ? semiprime_cache(tr.P1)
                            : std::shared_ptr<const std::vector<SemiprimePart>>();
    std::vector<std::uint64_t> squares;
    if (mu != 0.0) {
      const PrimeTable pt = sieve_primes(std::max<std::uint64_t>(isqrt(tr.P1), 2));
      for (std::uint64_t p : pt.primes)
        if (p * p <= tr.P1) squares.push_back(p * p);
    }

    for (std::uint64_t j = 1; j <= tr.J; ++j) {
      const std::uint64_t cap = tr.P1 / j;
      if (cap < 4) break;
      const long double jw = std::pow(static_cast<long double>(j), m - 1);
      if (lam != 0.0) {
        for (const SemiprimePart& part : *cache) {
          if (part.value > cap) break;
          const long double v = static_cast<long double>(part.value);
          kadd(lam * part.weight * jw * std::pow(v, m) *
               std::exp(-v * static_cast<long double>(j) / X));
        }
      }
      if (mu != 0.0) {
        for (std::uint64_t sq : squares) {
          if (sq > cap) break;
          const long double v = static_cast<long double>(sq);
          kadd(mu * jw * std::pow(v, m) * std::exp(-v * static_cast<long double>(j) / X));
        }
      }
    }

    const double scale = std::max(std::abs(static_cast<double>(sum)),
                                  std::pow(4.0, m) * std::exp(-4.0 / X));
    const double want = rel_target * scale;
    if (static_cast<double>(tr.tail) * (std::abs(lam) + std::abs(mu)) <= want)
      return static_cast<double>(sum);
    abs_target = want / (std::abs(lam) + std::abs(mu) + 1e-12);
  }
  throw BudgetError("phi_moment_exact: could not certify requested accuracy");
}

double phi_moment_asymptotic(int m, double X, const WeightConfig& config) {
  if (m < 0 || m > 3)
    throw std::invalid_argument("phi_moment_asymptotic: only moments m in 0..3 are supported");
  if (!(X > std::exp(1.0))) throw std::domain_error("phi_moment_asymptotic: requires X > e");

  static const double zeta2 = riemann_zeta(2.0).val();
  static const double zeta32 = riemann_zeta(1.5).val();
  static const double M = meissel_mertens().val();
  static const double sqrt_pi = std::sqrt(M_PI);
  // Gamma(m + 1/2) for m = 0..3.
  static const double gamma_half[4] = {sqrt_pi, sqrt_pi / 2, 3 * sqrt_pi / 4, 15 * sqrt_pi / 8};
  static const double factorial[4] = {1, 1, 2, 6};

  const double loglogX = std::log(std::log(X));
  const double logX = std::log(X);
  const double lam_part =
      2 * zeta2 * factorial[m] * std::pow(X, m + 1) * (M + loglogX) / logX;
  const double mu_part = gamma_half[m] * zeta32 * std::pow(X, m + 0.5) / logX;
  return config.lambda_real() * lam_part + config.mu_real() * mu_part;
}

std::vector<double> phi_power_series(const WeightConfig& config, std::uint64_t limit) {
  const double lam = config.lambda_real();
  const double mu = config.mu_real();
  std::vector<double> coeff(limit + 1, 0.0);
  const auto cache = semiprime_cache(std::max<std::uint64_t>(limit, 4));
  for (const SemiprimePart& part : *cache) {
    if (part.value > limit) break;
    const double base = lam * part.weight + (part.weight == 1 ? mu : 0.0);
    if (base == 0.0) continue;
    for (std::uint64_t j = 1; j * part.value <= limit; ++j)
      coeff[j * part.value] += base / static_cast<double>(j);
  }
  return coeff;
}

}  // namespace semipart
