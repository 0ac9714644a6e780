#include "semipart/special_values.hpp"

#include <quadmath.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "semipart/arith.hpp"

namespace semipart {

namespace {

constexpr quad kEps = quad(1.0) / (1ULL << 56) / (1ULL << 56);  // 2^-112

// Bernoulli numbers B_2, B_4, ..., B_34 as exact rationals.
struct BernoulliRat {
  long long num;
  long long den;
};
constexpr std::array<BernoulliRat, 17> kBernoulli = {{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
    {-23749461029LL, 870},
    {8615841276005LL, 14322},
    {-7709321041217LL, 510},
    {2577687858367LL, 6},
}};

quad bernoulli(int k) {  // B_{2k}, 1 <= k <= 17
  const BernoulliRat& b = kBernoulli[static_cast<std::size_t>(k - 1)];
  return static_cast<quad>(b.num) / static_cast<quad>(b.den);
}

struct KahanQ {
  quad sum = 0, comp = 0;
  void add(quad term) {
    const quad y = term - comp;
    const quad t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::string PrecisionReal::str(int digits) const {
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.*Qe", digits, value);
  return buf;
}

PrecisionReal riemann_zeta(double s_in, int depth) {
  if (!(s_in > 1.0)) throw std::domain_error("riemann_zeta: requires s > 1");
  const quad s = s_in;
  const int N = 64 * std::max(depth, 1);
  const int K = 14;

  KahanQ head;
  for (int n = N - 1; n >= 1; --n) head.add(powq(static_cast<quad>(n), -s));
  quad value = head.sum;
  const quad qN = static_cast<quad>(N);
  value += powq(qN, 1 - s) / (s - 1);
  value += powq(qN, -s) / 2;

  // Correction terms B_{2k}/(2k)! * (s)_(2k-1) * N^{-s-2k+1}; the remainder
  // is bounded by the first omitted term for real s.
  quad poch = s;  // (s)_(2k-1) built incrementally
  quad fact = 1;  // (2k)!
  quad term = 0;
  for (int k = 1; k <= K + 1; ++k) {
    fact *= static_cast<quad>(2 * k - 1) * static_cast<quad>(2 * k);
    if (k > 1) poch *= (s + static_cast<quad>(2 * k - 3)) * (s + static_cast<quad>(2 * k - 2));
    term = bernoulli(k) / fact * poch * powq(qN, -s - static_cast<quad>(2 * k - 1));
    if (k <= K) value += term;
  }
  const quad remainder = fabsq(term);

  PrecisionReal out;
  out.value = value;
  out.abs_error_bound = remainder + 16 * kEps * (fabsq(value) + 1);
  return out;
}

PrecisionReal prime_zeta(double s_in, int depth) {
  if (!(s_in > 1.0)) throw std::domain_error("prime_zeta: requires s > 1");
  const quad s = s_in;
  int N = static_cast<int>(std::ceil(110.0 / s_in)) + 4;
  N *= std::max(depth, 1);
  if ((N + 1) * s_in < 2.0) N = static_cast<int>(2.0 / s_in) + 1;

  KahanQ sum;
  quad err = 0;
  for (int n = 1; n <= N; ++n) {
    const int mu = mobius(static_cast<std::uint64_t>(n));
    if (mu == 0) continue;
    const PrecisionReal z = riemann_zeta(s_in * n, depth);
    sum.add(static_cast<quad>(mu) / static_cast<quad>(n) * logq(z.value));
    err += z.abs_error_bound / z.value / static_cast<quad>(n);
  }
  // Tail: |log zeta(x)| <= zeta(x)-1 <= 3*2^-x for x >= 2.
  const quad tail = 3 / static_cast<quad>(N + 1) *
                    powq(2, -(static_cast<quad>(N + 1)) * s) / (1 - powq(2, -s));

  PrecisionReal out;
  out.value = sum.sum;
  out.abs_error_bound = err + tail + 8 * kEps * (fabsq(sum.sum) + 1);
  return out;
}

PrecisionReal euler_gamma(int depth) {
  const int N = 1000 * std::max(depth, 1);
  const int K = 16;
  KahanQ harmonic;
  for (int n = N; n >= 1; --n) harmonic.add(1 / static_cast<quad>(n));

  const quad qN = static_cast<quad>(N);
  quad value = harmonic.sum - logq(qN) - 1 / (2 * qN);
  quad npow = qN * qN;
  for (int k = 1; k <= K; ++k) {
    value += bernoulli(k) / (static_cast<quad>(2 * k) * npow);
    npow *= qN * qN;
  }
  const quad remainder = fabsq(bernoulli(K + 1)) / (static_cast<quad>(2 * (K + 1)) * npow);

  PrecisionReal out;
  out.value = value;
  out.abs_error_bound = remainder + 8 * kEps * (logq(qN) + 2);
  return out;
}

PrecisionReal froberg_D(int depth) {
  const int J = 120 * std::max(depth, 1);
  KahanQ sum;
  quad err = 0;
  for (int j = 2; j <= J; ++j) {
    const PrecisionReal pz = prime_zeta(static_cast<double>(j), depth);
    sum.add(pz.value / static_cast<quad>(j));
    err += pz.abs_error_bound / static_cast<quad>(j);
  }
  // zeta_P(j) <= zeta(j) - 1 <= 3*2^-j.
  const quad tail = 6 / static_cast<quad>(J + 1) * powq(2, -static_cast<quad>(J + 1));

  PrecisionReal out;
  out.value = sum.sum;
  out.abs_error_bound = err + tail + 8 * kEps;
  return out;
}

PrecisionReal meissel_mertens(int depth) {
  const PrecisionReal gamma = euler_gamma(depth);
  const PrecisionReal d = froberg_D(depth);
  PrecisionReal out;
  out.value = gamma.value - d.value;
  out.abs_error_bound = gamma.abs_error_bound + d.abs_error_bound + 4 * kEps;
  return out;
}

namespace {

// All (k_1, ..., k_n) with k_1 + 2 k_2 + ... + n k_n = n.
void partition_vectors(int n, int max_part, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  if (max_part == 0) return;
  for (int mult = n / max_part; mult >= 0; --mult) {
    current[static_cast<std::size_t>(max_part - 1)] = mult;
    partition_vectors(n - mult * max_part, max_part - 1, current, out);
  }
  current[static_cast<std::size_t>(max_part - 1)] = 0;
}

}  // namespace

PrecisionReal almost_prime_zeta(int k, double s, int depth) {
  if (k < 1 || k > 8) throw std::domain_error("almost_prime_zeta: requires 1 <= k <= 8");
  if (!(s > 1.0)) throw std::domain_error("almost_prime_zeta: requires s > 1");

  std::vector<PrecisionReal> pz(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) pz[static_cast<std::size_t>(i)] = prime_zeta(s * i, depth);

  std::vector<std::vector<int>> partitions;
  std::vector<int> scratch(static_cast<std::size_t>(k), 0);
  partition_vectors(k, k, scratch, partitions);

  KahanQ total;
  quad err = 0;
  for (const std::vector<int>& part : partitions) {
    quad term = 1, rel = 0;
    for (int i = 1; i <= k; ++i) {
      const int mult = part[static_cast<std::size_t>(i - 1)];
      if (mult == 0) continue;
      const PrecisionReal& z = pz[static_cast<std::size_t>(i)];
      quad factor = powq(z.value, mult);
      quad denom = 1;
      for (int f = 2; f <= mult; ++f) denom *= f;
      denom *= powq(static_cast<quad>(i), mult);
      term *= factor / denom;
      rel += mult * (z.abs_error_bound / z.value);
    }
    total.add(term);
    err += term * rel;
  }

  PrecisionReal out;
  out.value = total.sum;
  out.abs_error_bound = err + 8 * kEps * (fabsq(total.sum) + 1);
  return out;
}

const char* variant_token(Variant v) {
  return v == Variant::theorem1 ? "theorem-1" : "theorem-7.2";
}

TheoremConstants theorem_constants(double lambda, Variant variant) {
  if (!(lambda > 0)) throw std::domain_error("theorem_constants: requires lambda > 0");
  static const PrecisionReal zeta2 = riemann_zeta(2.0);
  const quad kPi = 2 * acosq(quad(0));
  static const PrecisionReal M = meissel_mertens();
  const quad four_zeta2 = 4 * zeta2.value;
  const quad lam = lambda;

  TheoremConstants out;
  out.lambda = lambda;
  out.variant = variant;

  if (variant == Variant::theorem1) {
    out.c1.value = powq(four_zeta2, quad(0.25)) / (powq(2, quad(0.25)) * sqrtq(kPi));
    out.c3.value = (sqrtq(2) + powq(2, quad(-1.5))) * sqrtq(four_zeta2);
  } else {
    out.c1.value = powq(four_zeta2, quad(0.25)) / (2 * sqrtq(kPi) * powq(lam, quad(0.75)));
    out.c3.value = (lam + 1 / lam) / sqrtq(lam) * sqrtq(four_zeta2);
  }
  out.c2.value = M.value - logq(2);
  out.c4.value = 2 * kPi * sqrtq(static_cast<quad>(1) / 3);

  out.c1.abs_error_bound = zeta2.abs_error_bound + 8 * kEps;
  out.c2.abs_error_bound = M.abs_error_bound + 4 * kEps;
  out.c3.abs_error_bound = 4 * zeta2.abs_error_bound + 8 * kEps;
  out.c4.abs_error_bound = 8 * kEps;
  return out;
}

}  // namespace semipart
