#include "semipart/circle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "semipart/arith.hpp"
#include "semipart/errors.hpp"
#include "semipart/phi.hpp"
#include "semipart/saddle.hpp"
#include "semipart/special_values.hpp"

namespace semipart {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;
constexpr long double kEpsLd = 1.0842021724855044340e-19L;  // 2^-63

double wrap_half(double alpha) {
  double a = alpha - std::floor(alpha);
  if (a >= 0.5) a -= 1.0;
  return a;
}

}  // namespace

std::optional<Arc> ArcDecomposition::classify(double alpha) const {
  const double a = wrap_half(alpha);
  const std::uint64_t q_max = static_cast<std::uint64_t>(Q);
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const double scaled = a * static_cast<double>(q);
    const auto near = static_cast<std::int64_t>(std::llround(scaled));
    std::uint64_t abs_near = static_cast<std::uint64_t>(near < 0 ? -near : near);
    if (std::gcd(abs_near, q) != 1 && !(abs_near == 0 && q == 1)) continue;
    const double center = static_cast<double>(near) / static_cast<double>(q);
    const double delta = Q / (static_cast<double>(q) * X);
    if (std::abs(a - center) < delta) {
      Arc arc;
      arc.q = q;
      arc.a = ((near % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
              static_cast<std::int64_t>(q);
      arc.center = center;
      arc.half_width = delta;
      return arc;
    }
  }
  return std::nullopt;
}

double ArcDecomposition::total_measure() const {
  double measure = 0;
  for (const Arc& arc : arcs) measure += 2 * arc.half_width;
  return measure;
}

ArcDecomposition build_arcs(double X, double A, bool allow_small_A) {
  if (!(X >= std::exp(std::exp(1.0))))
    throw std::domain_error("build_arcs: requires X >= e^e");
  if (!(A > 18.0) && !allow_small_A)
    throw std::domain_error("build_arcs: requires A > 18 (or the explicit small-A override)");
  if (!(A > 0)) throw std::domain_error("build_arcs: requires A > 0");

  ArcDecomposition dec;
  dec.X = X;
  dec.A = A;
  dec.Q = std::pow(std::log(X), A);
  const auto q_max = static_cast<std::uint64_t>(dec.Q);
  if (q_max < 1) throw std::domain_error("build_arcs: Q < 1");

  // Adjacent Farey fractions a/q, a'/q' are exactly 1/(q q') apart, so the
  // family is pairwise disjoint iff X >= Q (q + q') for every adjacent
  // pair; the largest adjacent denominator sum is 2 q_max - 1.
  if (dec.Q * static_cast<double>(2 * q_max - 1) > X)
    throw std::domain_error(
        "build_arcs: overlapping arcs (X too small for this A); reduce A or raise X");
  if (q_max > 20000) throw BudgetError("build_arcs: arc family too large to enumerate");

  // Principal arc around 0 (the image of 1/1 under wrapping).
  const double base_delta = dec.Q / X;
  dec.arcs.push_back({1, 0, 0.0, base_delta});

  // Stern-Brocot / Farey next-term enumeration over (0, 1); the endpoint
  // 1/1 is the principal arc's image and is skipped.
  std::uint64_t a = 0, b = 1, c = 1, d = q_max;
  while (c <= q_max) {
    if (!(c == 1 && d == 1)) {
      Arc arc;
      arc.q = d;
      arc.a = static_cast<std::int64_t>(c);
      arc.center = wrap_half(static_cast<double>(c) / static_cast<double>(d));
      arc.half_width = dec.Q / (static_cast<double>(d) * X);
      dec.arcs.push_back(arc);
    }
    const std::uint64_t k = (q_max + b) / d;
    const std::uint64_t a2 = k * c - a, b2 = k * d - b;
    a = c;
    b = d;
    c = a2;
    d = b2;
  }

  std::sort(dec.arcs.begin(), dec.arcs.end(),
            [](const Arc& lhs, const Arc& rhs) { return lhs.center < rhs.center; });

  // Disjointness audit, including the wrap between the last arc and the
  // principal arc's image at +1.
  for (std::size_t i = 0; i + 1 < dec.arcs.size(); ++i) {
    const Arc& l = dec.arcs[i];
    const Arc& r = dec.arcs[i + 1];
    if (l.center + l.half_width > r.center - r.half_width)
      throw std::domain_error("build_arcs: overlapping arcs detected");
  }
  if (!dec.arcs.empty()) {
    const Arc& last = dec.arcs.back();
    if (last.center + last.half_width > 1.0 - base_delta && last.q != 1)
      throw std::domain_error("build_arcs: overlapping arcs detected at the wrap");
  }
  return dec;
}

namespace {

struct KahanLd {
  long double sum = 0, comp = 0;
  void add(long double t) {
    const long double y = t - comp, u = sum + y;
    comp = (u - sum) - y;
    sum = u;
  }
};

// Upper bound on Phi_config(rho2) = sum_m d_m rho2^m: the computed partial
// sum plus a bound on the dropped tail. |d_m| <= cmax (1 + ln m) <= cmax m.
long double phi_upper_at(const std::vector<std::pair<std::uint64_t, double>>& coeff,
                         double cmax, std::uint64_t limit, long double X2) {
  KahanLd sum;
  for (const auto& [m, c] : coeff)
    if (c > 0) sum.add(static_cast<long double>(c) * std::exp(-static_cast<long double>(m) / X2));
  const long double r = std::exp(-1.0L / X2);
  const long double p1 = static_cast<long double>(limit) + 1;
  const long double tail =
      cmax * std::exp(-p1 / X2) * (p1 / (1 - r) + r / ((1 - r) * (1 - r)));
  return sum.sum + tail;
}

}  // namespace

CoefficientRecovery recover_coefficient(std::uint64_t n, const WeightConfig& config,
                                        std::uint64_t n_samples, double rho,
                                        const PartitionSeries* exact) {
  if (!(rho > 0 && rho < 1))
    throw std::domain_error("recover_coefficient: requires 0 < rho < 1");
  if (n_samples <= n)
    throw std::domain_error("recover_coefficient: requires N_samples > n");
  const std::uint64_t N = n_samples;
  const long double X = -1.0L / std::log(static_cast<long double>(rho));

  // Truncating Phi at degree P >= n+1 changes no coefficient of exp(Phi)
  // below P, so the recovered target stays exact.
  const std::uint64_t plim =
      std::max<std::uint64_t>(n + 1, static_cast<std::uint64_t>(30.0L * X) + 64);
  const std::vector<double> dense = phi_power_series(config, plim);
  std::vector<std::pair<std::uint64_t, double>> coeff;
  coeff.reserve(1024);
  for (std::uint64_t m = 4; m <= plim; ++m)
    if (dense[m] != 0.0) coeff.emplace_back(m, dense[m]);

  // Radial weights S_m = d_m rho^m.
  std::vector<std::pair<std::uint64_t, long double>> radial;
  radial.reserve(coeff.size());
  for (const auto& [m, c] : coeff)
    radial.emplace_back(m, static_cast<long double>(c) *
                               std::exp(-static_cast<long double>(m) / X));

  // Twiddle table e(r/N).
  std::vector<std::complex<long double>> tw(N);
  for (std::uint64_t r = 0; r < N; ++r) {
    const long double th = kTwoPi * static_cast<long double>(r) / static_cast<long double>(N);
    tw[r] = {std::cos(th), std::sin(th)};
  }

  // Samples Psi_k for k = 0..N/2 (conjugate symmetry supplies the rest).
  const std::uint64_t half = N / 2;
  KahanLd acc, abs_acc;
  for (std::uint64_t k = 0; k <= half; ++k) {
    KahanLd re, im;
    for (const auto& [m, s] : radial) {
      const std::uint64_t idx = (m % N) * k % N;
      re.add(s * tw[idx].real());
      im.add(s * tw[idx].imag());
    }
    const long double mag = std::exp(re.sum);
    const std::complex<long double> psi{mag * std::cos(im.sum), mag * std::sin(im.sum)};
    const std::uint64_t r = (n % N) * k % N;
    const std::complex<long double> rot{tw[r].real(), -tw[r].imag()};
    const long double contrib = (psi * rot).real();
    const bool interior = k != 0 && (k != half || N % 2 != 0);
    acc.add(interior ? 2 * contrib : contrib);
    abs_acc.add(interior ? 2 * mag : mag);
  }

  CoefficientRecovery out;
  out.n = n;
  out.n_samples = N;
  out.rho = rho;
  const long double rho_pow_n = std::exp(static_cast<long double>(n) / X);
  out.raw = rho_pow_n * acc.sum / static_cast<long double>(N);
  out.fp_bound = rho_pow_n * abs_acc.sum / static_cast<long double>(N) * 256 * kEpsLd;

  // Alias bound: exact series terms while available, then the certified
  // coefficient bound p(m) <= exp(Phi_up(rho2)) rho2^{-m} summed
  // geometrically, minimized over a few trial radii rho2 > rho.
  const double cmax = 2.0 * std::abs(config.lambda_real()) + std::abs(config.mu_real());
  KahanLd alias;
  std::uint64_t t1 = 1;
  if (exact != nullptr) {
    while (n + t1 * N <= exact->n_max) {
      const double logp = exact->log_at(n + t1 * N);
      if (logp != -std::numeric_limits<double>::infinity())
        alias.add(std::exp(static_cast<long double>(logp) -
                            static_cast<long double>(t1 * N) / X));
      ++t1;
    }
  }
  const long double m1 = static_cast<long double>(n) + static_cast<long double>(t1 * N);
  long double tail_best = std::numeric_limits<long double>::infinity();
  for (double factor : {1.25, 1.5, 2.0, 3.0, 5.0, 8.0}) {
    const long double X2 = X * static_cast<long double>(factor);
    const long double phi_up = phi_upper_at(coeff, cmax, plim, X2);
    const long double ratio = std::exp(-static_cast<long double>(N) * (1 / X - 1 / X2));
    if (!(ratio < 1)) continue;
    const long double first =
        std::exp(phi_up + m1 / X2 - static_cast<long double>(t1 * N) / X);
    const long double tail = first / (1 - ratio);
    tail_best = std::min(tail_best, tail);
  }
  alias.add(tail_best);
  out.alias_bound = alias.sum;

  if (out.alias_bound + out.fp_bound < 0.5L) {
    out.accepted = true;
    const long long r = std::llround(out.raw);
    out.rounded = mpz_class(static_cast<long>(r));
  }
  return out;
}

CoefficientRecovery recover_coefficient_auto(std::uint64_t n, const WeightConfig& config,
                                             const PartitionSeries* exact) {
  double X = 1.0;
  try {
    X = closed_form_X(n, config.lambda_real());
  } catch (const std::domain_error&) {
    X = std::max(1.0, static_cast<double>(n) / 8.0);
  }
  const double rho = std::exp(-1.0 / X);
  std::uint64_t N = 8;
  while (N < 4 * (n + 1)) N *= 2;
  CoefficientRecovery rec;
  for (; N <= (1u << 21); N *= 2) {
    rec = recover_coefficient(n, config, N, rho, exact);
    if (rec.accepted) return rec;
  }
  return rec;  // unaccepted, bounds reported
}

PhiProfile profile_phi(double X, const WeightConfig& config, std::uint64_t grid_size,
                       const ArcDecomposition* arcs) {
  if (!(X >= 100.0)) throw std::domain_error("profile_phi: requires X >= 100");
  if (grid_size < 2) throw std::domain_error("profile_phi: grid too small");
  const double rho = std::exp(-1.0 / X);

  const double phi0 = phi_moment_exact(0, X, config, 1e-9);
  const double target = std::max(1e-12, 1e-8 * std::abs(phi0));

  std::vector<double> alphas;
  alphas.reserve(grid_size + (arcs != nullptr ? arcs->arcs.size() : 0));
  for (std::uint64_t i = 0; i < grid_size; ++i)
    alphas.push_back(-0.5 + static_cast<double>(i) / static_cast<double>(grid_size));
  if (arcs != nullptr)
    for (const Arc& arc : arcs->arcs) alphas.push_back(arc.center);
  std::sort(alphas.begin(), alphas.end());

  PhiProfile profile;
  profile.phi_at_origin = phi0;
  profile.rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const PhiEvaluation ev = phi_config(config, rho, alpha, target);
    const double re = static_cast<double>(ev.value.real());
    ProfileRow row{alpha, re, std::exp(static_cast<long double>(re))};
    profile.rows.push_back(row);
    const double ratio = re / phi0;
    if (alpha == -0.5 || std::abs(alpha + 0.5) < 1e-15) profile.ratio_at_half = ratio;
    if (arcs != nullptr) {
      const auto arc = arcs->classify(alpha);
      if (arc.has_value() && !arc->principal())
        profile.max_ratio_nonprincipal = std::max(profile.max_ratio_nonprincipal, ratio);
    }
  }
  return profile;
}

long long ramanujan_sum(std::uint64_t q, std::int64_t a) {
  if (q < 1) throw std::domain_error("ramanujan_sum: requires q >= 1");
  if (q > 1000000) throw BudgetError("ramanujan_sum: q > 1e6 exceeds the direct-sum budget");
  std::int64_t am = a % static_cast<std::int64_t>(q);
  if (am < 0) am += static_cast<std::int64_t>(q);
  KahanLd sum;
  for (std::uint64_t l = 1; l <= q; ++l) {
    if (std::gcd(l, q) != 1) continue;
    const long double th =
        kTwoPi * static_cast<long double>(static_cast<std::uint64_t>(am) * l % q) /
        static_cast<long double>(q);
    sum.add(std::cos(th));
  }
  const long long rounded = std::llround(sum.sum);
  if (std::fabs(sum.sum - static_cast<long double>(rounded)) > 1e-6L)
    throw std::runtime_error("ramanujan_sum: accumulated sum is not near an integer");
  return rounded;
}

MajorArcSum major_arc_sum(std::uint64_t q, std::int64_t a, double X) {
  if (q < 1) throw std::domain_error("major_arc_sum: requires q >= 1");
  std::int64_t am = a % static_cast<std::int64_t>(q);
  if (am < 0) am += static_cast<std::int64_t>(q);
  if (std::gcd(static_cast<std::uint64_t>(am) % q, q) != 1 && q != 1)
    throw std::domain_error("major_arc_sum: requires gcd(a, q) = 1");

  MajorArcSum out;
  const auto j_max = static_cast<std::uint64_t>(std::sqrt(X));
  KahanLd sum;
  for (std::uint64_t j = 1; j <= j_max; ++j) {
    const std::uint64_t g = std::gcd(q, j);
    const std::uint64_t qj = q / g;
    const std::uint64_t aj = static_cast<std::uint64_t>(am) % qj * ((j / g) % qj) % qj;
    sum.add(static_cast<long double>(ramanujan_sum(qj, static_cast<std::int64_t>(aj))) /
            (static_cast<long double>(j) * static_cast<long double>(j) *
             static_cast<long double>(totient(qj))));
  }
  out.partial_sum = static_cast<double>(sum.sum);
  out.terms = j_max;

  static const double zeta2 = riemann_zeta(2.0).val();
  double prod = 1.0;
  std::uint64_t rest = q;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      prod *= -static_cast<double>(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) prod *= -static_cast<double>(rest);
  out.closed_form = zeta2 * prod / (static_cast<double>(q) * static_cast<double>(q));
  return out;
}

}  // namespace semipart
