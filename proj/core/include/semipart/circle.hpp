#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "semipart/partitions.hpp"
#include "semipart/weights.hpp"

namespace semipart {

/// One arc (a/q - delta_q, a/q + delta_q) with its center mapped into
/// [-1/2, 1/2). The principal arc is (q=1, a=0).
struct Arc {
  std::uint64_t q = 1;
  std::int64_t a = 0;
  double center = 0;
  double half_width = 0;

  bool principal() const { return q == 1; }
};

/// Farey dissection: all arcs with 1 <= q <= Q = (log X)^A and half-widths
/// delta_q = (log X)^A / (q X).
struct ArcDecomposition {
  double X = 0;
  double A = 0;
  double Q = 0;
  std::vector<Arc> arcs;  // sorted by center

  /// Containng arc, or nullopt when alpha lies on the minor arcs.
  std::optional<Arc> classify(double alpha) const;
  /// Total length of the major arcs inside [-1/2, 1/2).
  double total_measure() const;
};

/// Builds the arc family. Requires X >= e^e and A > 18 unless
/// allow_small_A is set (desk-scale experimentation). Throws
/// std::domain_error when the arcs would overlap (X too small for A).
ArcDecomposition build_arcs(double X, double A, bool allow_small_A = false);

/// DFT recovery of one power-series coefficient from samples of
/// exp(Phi) on the circle |z| = rho.
struct CoefficientRecovery {
  std::uint64_t n = 0;
  std::uint64_t n_samples = 0;
  double rho = 0;
  long double raw = 0;
  long double alias_bound = 0;  // certified bound on sum_t p(n+tN) rho^{tN}
  long double fp_bound = 0;     // certified floating-point allowance
  bool accepted = false;        // alias_bound + fp_bound < 1/2
  mpz_class rounded;
};

/// raw = rho^{-n} (1/N) sum_k Psi(rho e(k/N)) e(-nk/N). Rounds only when
/// the combined alias + floating-point bound is below 1/2; otherwise the
/// result is returned unaccepted with the bounds filled in (caller must
/// raise N_samples or lower rho). `exact`, when given, sharpens the alias
/// bound with exact series values.
CoefficientRecovery recover_coefficient(std::uint64_t n, const WeightConfig& config,
                                        std::uint64_t n_samples, double rho,
                                        const PartitionSeries* exact = nullptr);

/// Default-parameter recovery: rho at the closed-form saddle radius,
/// N starting at the next power of two >= 4n and doubling until the
/// certification succeeds.
CoefficientRecovery recover_coefficient_auto(std::uint64_t n, const WeightConfig& config,
                                             const PartitionSeries* exact = nullptr);

struct ProfileRow {
  double alpha = 0;
  double re_phi = 0;
  long double abs_psi = 0;  // exp(re_phi), may overflow to inf at large X
};

struct PhiProfile {
  std::vector<ProfileRow> rows;
  double phi_at_origin = 0;
  double max_ratio_nonprincipal = 0;  // max Re Phi / Phi(rho) over samples
                                      // falling on non-principal major arcs
  double ratio_at_half = 0;           // Re Phi(rho e(1/2)) / Phi(rho)
};

/// Samples Re Phi(rho e(alpha)) on a uniform grid plus all arc centers.
/// Requires X >= 100.
PhiProfile profile_phi(double X, const WeightConfig& config, std::uint64_t grid_size,
                       const ArcDecomposition* arcs = nullptr);

/// S*(q, a) = sum over 1 <= l <= q, gcd(l, q) = 1 of e(a l / q), by direct
/// summation (exact integer for q <= 10^6).
long long ramanujan_sum(std::uint64_t q, std::int64_t a);

struct MajorArcSum {
  double partial_sum = 0;  // sum_{j <= sqrt(X)} S*(q_j, a_j) / (j^2 phi(q_j))
  double closed_form = 0;  // zeta(2) prod_{p | q} (-p) / q^2
  std::uint64_t terms = 0;
};

/// Requires gcd(a, q) = 1.
MajorArcSum major_arc_sum(std::uint64_t q, std::int64_t a, double X);

}  // namespace semipart
