#pragma once

#include <string>

namespace semipart {

using quad = __float128;

/// A value together with a certified absolute error bound
/// (series truncation tail plus an arithmetic rounding allowance).
struct PrecisionReal {
  quad value = 0;
  quad abs_error_bound = 0;

  double val() const { return static_cast<double>(value); }
  double err() const { return static_cast<double>(abs_error_bound); }
  std::string str(int digits = 33) const;
};

/// Riemann zeta for real s > 1 by Euler-Maclaurin with an explicit
/// remainder bound; abs_error_bound <= 1e-12 guaranteed (far smaller in
/// practice). Throws std::domain_error for s <= 1.
/// `depth` scales the truncation indices (tests double it).
PrecisionReal riemann_zeta(double s, int depth = 1);

/// Prime zeta zeta_P(s) = sum_p p^{-s} for s > 1, via the Moebius series
/// sum_n mu(n)/n * log zeta(n s) with a certified tail.
PrecisionReal prime_zeta(double s, int depth = 1);

/// Euler's constant by Euler-Maclaurin on harmonic numbers with a
/// completely monotone remainder bound.
PrecisionReal euler_gamma(int depth = 1);

/// D = sum_{j>=2} zeta_P(j)/j, approx 0.315718452...
PrecisionReal froberg_D(int depth = 1);

/// Meissel-Mertens constant M = gamma - D, approx 0.26149721...
PrecisionReal meissel_mertens(int depth = 1);

/// zeta over k-almost-primes: sum over partitions k1 + 2 k2 + ... = k of
/// prod zeta_P(i s)^{k_i} / (k_i! i^{k_i}). Requires 1 <= k <= 8, s > 1.
PrecisionReal almost_prime_zeta(int k, double s, int depth = 1);

enum class Variant { theorem1, theorem72 };

/// The closed-form constants attached to the asymptotic main terms.
/// c2 = M - log 2 in both variants; c4 = 2 pi sqrt(1/3).
struct TheoremConstants {
  double lambda = 0.5;
  PrecisionReal c1, c2, c3, c4;
  Variant variant = Variant::theorem1;
};

TheoremConstants theorem_constants(double lambda, Variant variant);

const char* variant_token(Variant v);

}  // namespace semipart
