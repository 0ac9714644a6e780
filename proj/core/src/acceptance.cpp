#include "semipart/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "semipart/asymptotics.hpp"
#include "semipart/circle.hpp"
#include "semipart/partitions.hpp"
#include "semipart/phi.hpp"
#include "semipart/saddle.hpp"
#include "semipart/sieve.hpp"
#include "semipart/special_values.hpp"
#include "semipart/weyl.hpp"

namespace semipart {

namespace {

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

const std::vector<WeightConfig>& all_configs() {
  static const std::vector<WeightConfig> configs = {
      WeightConfig::p2(), WeightConfig::p2_distinct(), WeightConfig::p2_sharp()};
  return configs;
}

// 1. Exact-count oracle equivalence for n <= 120, all three sets.
CriterionResult criterion_exact_oracle(const AcceptanceOptions&) {
  CriterionResult res{1, "exact counts match the brute-force oracle (n <= 120)", true, "", 0};
  for (const WeightConfig& config : all_configs()) {
    const PartitionSeries series = partition_series(config, 120);
    for (std::uint64_t n = 0; n <= 120; ++n) {
      if (series.counts[n] != brute_force_count(config, n)) {
        res.pass = false;
        res.details += fmt("mismatch at %s n=%llu; ", config.token(),
                           static_cast<unsigned long long>(n));
      }
    }
  }
  if (res.pass) res.details = "3 x 121 coefficients, exact equality";
  return res;
}

// 2. Convolution identity p2 * p2ne = p2sharp up to 2000.
CriterionResult criterion_convolution(const AcceptanceOptions&) {
  CriterionResult res{2, "convolution identity exact to n = 2000", true, "", 0};
  const auto failure = convolution_check(2000);
  if (failure.has_value()) {
    res.pass = false;
    res.details = fmt("first failure at n=%llu", static_cast<unsigned long long>(*failure));
  } else {
    res.details = "identity holds exactly for all n <= 2000";
  }
  return res;
}

// 3. Circle-method recovery equals the DP exactly for n <= 256.
CriterionResult criterion_circle_exact(const AcceptanceOptions&) {
  CriterionResult res{3, "DFT coefficient recovery exact for n <= 256", true, "", 0};
  long double worst_budget = 0;
  for (const WeightConfig& config : all_configs()) {
    const PartitionSeries series = partition_series(config, 256);
    for (std::uint64_t n = 0; n <= 256; ++n) {
      const CoefficientRecovery rec = recover_coefficient_auto(n, config, nullptr);
      if (!rec.accepted) {
        res.pass = false;
        res.details += fmt("recovery refused at %s n=%llu (alias %.3Le); ", config.token(),
                           static_cast<unsigned long long>(n), rec.alias_bound);
        continue;
      }
      worst_budget = std::max(worst_budget, rec.alias_bound + rec.fp_bound);
      if (rec.rounded != series.counts[n]) {
        res.pass = false;
        res.details += fmt("wrong coefficient at %s n=%llu; ", config.token(),
                           static_cast<unsigned long long>(n));
      }
    }
  }
  if (res.pass)
    res.details = fmt("3 x 257 coefficients exact; worst certified alias+fp = %.3Le",
                      worst_budget);
  return res;
}

// 4. Constants against their reference values and the dual prime-zeta route.
CriterionResult criterion_constants(const AcceptanceOptions&) {
  CriterionResult res{4, "constants: M, D, prime zeta dual route", true, "", 0};
  const PrecisionReal M = meissel_mertens();
  const PrecisionReal D = froberg_D();
  const double m_err = std::abs(M.val() - 0.26149721);
  const double d_err = std::abs(D.val() - 0.315718452);
  if (!(m_err <= 1e-6)) {
    res.pass = false;
    res.details += fmt("M off by %.3e; ", m_err);
  }
  if (!(d_err <= 1e-8)) {
    res.pass = false;
    res.details += fmt("D off by %.3e; ", d_err);
  }

  // Direct prime-sum oracle with a certified tail from pi(t) <= 1.26 t/ln t.
  const PrimeTable primes = sieve_primes(1000000);
  for (double s : {1.5, 2.0, 3.0, 4.0}) {
    long double direct = 0, comp = 0;
    for (auto it = primes.primes.rbegin(); it != primes.primes.rend(); ++it) {
      const long double term = std::pow(static_cast<long double>(*it), -(long double)s);
      const long double y = term - comp, t = direct + y;
      comp = (t - direct) - y;
      direct = t;
    }
    const double P = 1e6;
    const double tail = 1.26 * s / std::log(P) * std::pow(P, 1.0 - s) / (s - 1.0);
    const PrecisionReal pz = prime_zeta(s);
    const double diff = std::abs(pz.val() - static_cast<double>(direct));
    const double budget = pz.err() + tail + 1e-15;
    if (!(diff <= budget)) {
      res.pass = false;
      res.details += fmt("prime_zeta(%.1f) dual-route gap %.3e > %.3e; ", s, diff, budget);
    }
  }
  if (res.pass)
    res.details = fmt("M within %.2e, D within %.2e, dual prime-zeta routes agree", m_err, d_err);
  return res;
}

// 5. Moment law: bracket at X=1e3, trend from 1e2 to 1e4.
CriterionResult criterion_moment_law(const AcceptanceOptions&) {
  CriterionResult res{5, "moment law: bracket at X=1e3, trend 1e2 -> 1e4", true, "", 0};
  const WeightConfig config = WeightConfig::p2_sharp();  // pure Phi_P2 moments
  std::ostringstream detail;
  for (int m = 0; m <= 2; ++m) {
    double ratios[3];
    int i = 0;
    for (double X : {1e2, 1e3, 1e4}) {
      ratios[i++] = phi_moment_exact(m, X, config) / phi_moment_asymptotic(m, X, config);
    }
    detail << fmt("m=%d ratios %.4f/%.4f/%.4f  ", m, ratios[0], ratios[1], ratios[2]);
    if (!(ratios[1] >= 0.5 && ratios[1] <= 2.0)) {
      res.pass = false;
      res.details += fmt("m=%d ratio at 1e3 = %.4f outside [0.5,2]; ", m, ratios[1]);
    }
    if (!(std::abs(ratios[2] - 1) < std::abs(ratios[0] - 1))) {
      res.pass = false;
      res.details += fmt("m=%d trend violated (%.4f vs %.4f); ", m, std::abs(ratios[2] - 1),
                         std::abs(ratios[0] - 1));
    }
  }
  if (res.pass) res.details = detail.str();
  return res;
}

// 6. Semiprime counting law: bracket at 1e6, trend 1e5 -> 1e7.
CriterionResult criterion_semiprime_pnt(const AcceptanceOptions&) {
  CriterionResult res{6, "semiprime counting law: bracket at 1e6, trend 1e5 -> 1e7", true, "", 0};
  const double r5 = static_cast<double>(pi2_star(100000)) / pi2_star_leading(1e5);
  const double r6 = static_cast<double>(pi2_star(1000000)) / pi2_star_leading(1e6);
  const double r7 = static_cast<double>(pi2_star(10000000)) / pi2_star_leading(1e7);
  std::ostringstream detail;
  detail << fmt("ratios: 1e5 %.6f, 1e6 %.6f, 1e7 %.6f", r5, r6, r7);
  if (!(r6 >= 0.5 && r6 <= 1.5)) {
    res.pass = false;
    res.details += fmt("ratio at 1e6 = %.4f outside [0.5,1.5]; ", r6);
  }
  if (!(std::abs(r7 - 1) < std::abs(r5 - 1))) {
    res.pass = false;
    res.details += fmt("trend violated: |r(1e7)-1|=%.6f >= |r(1e5)-1|=%.6f (%s)",
                       std::abs(r7 - 1), std::abs(r5 - 1), detail.str().c_str());
  }
  if (res.pass) res.details = detail.str();
  return res;
}

// 7. Saddle estimate within (0.5, 2) of exact, improving along n.
CriterionResult criterion_saddle_ratio(const AcceptanceOptions&) {
  CriterionResult res{7, "saddle estimate brackets the exact count, improving in n", true, "", 0};
  const WeightConfig config = WeightConfig::p2();
  const PartitionSeries series = partition_series(config, 20000);
  double prev_abs_log = 1e300;
  std::ostringstream detail;
  for (std::uint64_t n : {2000ull, 5000ull, 10000ull, 20000ull}) {
    const double log_ratio = saddle_estimate(n, config) - series.log_at(n);
    const double ratio = std::exp(log_ratio);
    detail << fmt("n=%llu ratio %.4f  ", static_cast<unsigned long long>(n), ratio);
    if (!(ratio > 0.5 && ratio < 2.0)) {
      res.pass = false;
      res.details += fmt("ratio %.4f at n=%llu outside (0.5,2); ", ratio,
                         static_cast<unsigned long long>(n));
    }
    if (!(std::abs(log_ratio) <= prev_abs_log + 1e-12)) {
      res.pass = false;
      res.details += fmt("|log ratio| increased at n=%llu; ",
                         static_cast<unsigned long long>(n));
    }
    prev_abs_log = std::abs(log_ratio);
  }
  if (res.pass) res.details = detail.str();
  return res;
}

// 8. Exponent fit selects exactly one closed-form variant.
CriterionResult criterion_exponent_fit(const AcceptanceOptions&) {
  CriterionResult res{8, "exponent fit resolves the c3 variant", true, "", 0};
  const WeightConfig config = WeightConfig::p2();
  const PartitionSeries series = partition_series(config, 20000);
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = 2000; n <= 20000; n += 100) ns.push_back(n);
  const ComparisonReport report = comparison_report(ns, config, &series);
  if (!report.fit.valid) {
    res.pass = false;
    res.details = "fit did not run";
    return res;
  }
  const double c3_1 = theorem_constants(0.5, Variant::theorem1).c3.val();
  const double c3_72 = theorem_constants(0.5, Variant::theorem72).c3.val();
  const double d1 = std::abs(report.fit.c3_hat - c3_1);
  const double d72 = std::abs(report.fit.c3_hat - c3_72);
  const bool one_wins = (2 * d1 <= d72) != (2 * d72 <= d1);
  res.details = fmt("c3_hat=%.4f (ci %.4f..%.4f), |to thm1 %.4f|=%.4f, |to thm72 %.4f|=%.4f",
                    report.fit.c3_hat, report.fit.ci_low, report.fit.ci_high, c3_1, d1, c3_72,
                    d72);
  if (!one_wins) {
    res.pass = false;
    res.details += " -- no variant is 2x closer";
  } else {
    res.details += (d1 < d72) ? " -> theorem-1 wins" : " -> theorem-7.2 wins";
  }
  return res;
}

// 9. Ramanujan-sum reduction closed form at X = 1e6.
CriterionResult criterion_ramanujan(const AcceptanceOptions&) {
  CriterionResult res{9, "major-arc Ramanujan sums match the closed form", true, "", 0};
  std::ostringstream detail;
  for (std::uint64_t q : {1ull, 2ull, 3ull, 4ull, 6ull, 12ull}) {
    const MajorArcSum sum = major_arc_sum(q, 1, 1e6);
    const double gap = std::abs(sum.partial_sum - sum.closed_form);
    detail << fmt("q=%llu gap %.2e  ", static_cast<unsigned long long>(q), gap);
    if (!(gap <= 1e-2)) {
      res.pass = false;
      res.details += fmt("q=%llu gap %.3e > 1e-2; ", static_cast<unsigned long long>(q), gap);
    }
  }
  if (res.pass) res.details = detail.str();
  return res;
}

// 10. Weyl machinery: minimax closed forms, sweep ratio cap, dual routes.
CriterionResult criterion_weyl(const AcceptanceOptions& options) {
  CriterionResult res{10, "Weyl machinery: minimax roots, sweep cap, dual S2 routes", true, "",
                      0};
  std::mt19937_64 rng(20240917);
  for (int i = 0; i < 10; ++i) {
    const double X = std::pow(10.0, 3.0 + 4.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53));
    const double q = 1.0 + (std::sqrt(X) - 1.0) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    const MinimaxReport rep = minimax_check(X, q);
    if (!(rep.max_rel_diff_m <= 1e-6 && rep.max_rel_diff_f <= 1e-6)) {
      res.pass = false;
      res.details += fmt("minimax mismatch at X=%.3e q=%.3e (%.2e, %.2e); ", X, q,
                         rep.max_rel_diff_m, rep.max_rel_diff_f);
    }
  }

  const std::uint64_t X = 1000000;
  const double pi2 = static_cast<double>(pi2_star(X));
  const auto sweep = bound_ratio_sweep(X, 1000, 42, options.threads);
  double max_ratio = 0;
  for (const WeylBoundReport& rep : sweep) {
    max_ratio = std::max(max_ratio, rep.ratio);
    if (!(rep.abs_s2 <= pi2 * (1 + 1e-9))) {
      res.pass = false;
      res.details += fmt("|S2|=%.6e exceeds pi2*=%.6e at alpha=%.6f; ", rep.abs_s2, pi2,
                         rep.alpha);
    }
  }
  if (!(max_ratio <= 10.0)) {
    res.pass = false;
    res.details += fmt("sweep max ratio %.3f > 10; ", max_ratio);
  }

  for (double alpha : {0.0, 0.6180339887498949, 0.1234567890123, 1.0 / 3.0}) {
    const auto a = s2(alpha, 100000);
    const auto b = s2_pair_reference(alpha, 100000);
    if (a.real() != b.real() || a.imag() != b.imag()) {
      res.pass = false;
      res.details += fmt("dual S2 routes differ at alpha=%.6f; ", alpha);
    }
  }
  if (res.pass) res.details = fmt("minimax <= 1e-6, sweep max ratio %.4f, dual routes exact",
                                  max_ratio);
  return res;
}

// 11. Non-principal-arc suppression of Re Phi at X = 1e3.
CriterionResult criterion_nonprincipal(const AcceptanceOptions&) {
  CriterionResult res{11, "non-principal-arc suppression of Re Phi", true, "", 0};
  const double X = 1000;
  const ArcDecomposition arcs = build_arcs(X, 1.5, /*allow_small_A=*/true);
  const PhiProfile profile = profile_phi(X, WeightConfig::p2_sharp(), 512, &arcs);
  res.details = fmt("max RePhi/Phi(rho) on non-principal arcs = %.4f (3/4 reference; "
                    "ratio at alpha=1/2: %.4f)",
                    profile.max_ratio_nonprincipal, profile.ratio_at_half);
  if (!(profile.max_ratio_nonprincipal <= 0.9)) {
    res.pass = false;
    res.details += " -- exceeds 0.9";
  }
  return res;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  switch (id) {
    case 1: res = criterion_exact_oracle(options); break;
    case 2: res = criterion_convolution(options); break;
    case 3: res = criterion_circle_exact(options); break;
    case 4: res = criterion_constants(options); break;
    case 5: res = criterion_moment_law(options); break;
    case 6: res = criterion_semiprime_pnt(options); break;
    case 7: res = criterion_saddle_ratio(options); break;
    case 8: res = criterion_exponent_fit(options); break;
    case 9: res = criterion_ramanujan(options); break;
    case 10: res = criterion_weyl(options); break;
    case 11: res = criterion_nonprincipal(options); break;
    default: throw std::domain_error("run_criterion: id must be 1..11");
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::vector<int>& ids) {
  std::vector<int> list = ids;
  if (list.empty())
    for (int i = 1; i <= kCriterionCount; ++i) list.push_back(i);
  std::vector<CriterionResult> out;
  out.reserve(list.size());
  for (int id : list) out.push_back(run_criterion(id, options));
  return out;
}

std::string acceptance_markdown(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  os << "# Verification summary\n\n";
  os << "| # | criterion | result | time (s) |\n|---|-----------|--------|----------|\n";
  for (const CriterionResult& r : results)
    os << "| " << r.id << " | " << r.name << " | " << (r.pass ? "PASS" : "FAIL") << " | "
       << fmt("%.1f", r.seconds) << " |\n";
  os << "\n";
  for (const CriterionResult& r : results)
    os << "- **" << r.id << "** " << (r.pass ? "PASS" : "FAIL") << ": " << r.details << "\n";
  return os.str();
}

}  // namespace semipart
