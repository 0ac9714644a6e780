#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "semipart/acceptance.hpp"
#include "semipart/asymptotics.hpp"
#include "semipart/circle.hpp"
#include "semipart/errors.hpp"
#include "semipart/parallel.hpp"
#include "semipart/partitions.hpp"
#include "semipart/saddle.hpp"
#include "semipart/sieve.hpp"
#include "semipart/special_values.hpp"
#include "semipart/weyl.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using semipart::WeightConfig;

// Every CSV starts with a provenance line so the file is self-describing.
void provenance(std::ostream& os, const std::string& cmd, const std::string& params,
                std::uint64_t seed, unsigned threads) {
  os << "# semipart " << kVersion << " cmd=" << cmd << " " << params << " seed=" << seed
     << " threads=" << threads << "\n";
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::domain_error("cannot open output file: " + path);
    os = &file;
  }
};

std::string d2s(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_sieve(std::uint64_t limit, std::uint64_t mod_q, std::int64_t ell,
              const std::string& csv, unsigned threads) {
  OutputTarget out;
  out.open(csv);
  std::ostringstream params;
  params << "limit=" << limit;
  if (mod_q > 0) params << " mod=" << mod_q;
  provenance(*out.os, "sieve", params.str(), 0, threads);
  if (mod_q == 0) {
    *out.os << "value,weight\n";
    for (const auto& part : semipart::semiprime_parts(limit))
      *out.os << part.value << "," << part.weight << "\n";
  } else {
    *out.os << "t,q,ell,count\n";
    auto emit = [&](std::uint64_t l) {
      const auto rc = semipart::semiprime_count_mod(limit, mod_q, l);
      *out.os << rc.t << "," << rc.q << "," << rc.ell << "," << rc.count << "\n";
    };
    if (ell >= 0) {
      emit(static_cast<std::uint64_t>(ell));
    } else {
      for (std::uint64_t l = 1; l <= mod_q; ++l)
        if (std::gcd(l, mod_q) == 1) emit(l % mod_q);
    }
  }
  return 0;
}

int run_count(const std::string& set, std::uint64_t nmax, const std::string& csv,
              unsigned threads) {
  const WeightConfig config = WeightConfig::from_token(set);
  const auto series = semipart::partition_series(config, nmax);
  OutputTarget out;
  out.open(csv);
  provenance(*out.os, "count", "set=" + set + " nmax=" + std::to_string(nmax), 0, threads);
  *out.os << "n,count\n";
  for (std::uint64_t n = 0; n <= nmax; ++n)
    *out.os << n << "," << series.counts[n].get_str() << "\n";
  return 0;
}

int run_constants(bool as_json, double lambda, unsigned threads) {
  using semipart::Variant;
  const auto gamma = semipart::euler_gamma();
  const auto M = semipart::meissel_mertens();
  const auto D = semipart::froberg_D();
  const auto zeta2 = semipart::riemann_zeta(2.0);
  const auto zeta32 = semipart::riemann_zeta(1.5);
  const auto t1 = semipart::theorem_constants(lambda, Variant::theorem1);
  const auto t72 = semipart::theorem_constants(lambda, Variant::theorem72);

  if (as_json) {
    nlohmann::json j;
    auto put = [&](const char* key, const semipart::PrecisionReal& v) {
      j[key] = v.val();
      j[std::string(key) + "_error"] = v.err();
    };
    put("gamma", gamma);
    put("meissel_mertens", M);
    put("froberg_D", D);
    put("zeta_2", zeta2);
    put("zeta_3_2", zeta32);
    j["lambda"] = lambda;
    for (const auto& [tag, tc] : {std::pair<const char*, const semipart::TheoremConstants&>{
                                      "theorem_1", t1},
                                  {"theorem_7_2", t72}}) {
      nlohmann::json sub;
      sub["c1"] = tc.c1.val();
      sub["c2"] = tc.c2.val();
      sub["c3"] = tc.c3.val();
      sub["c4"] = tc.c4.val();
      j[tag] = sub;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    provenance(std::cout, "constants", "lambda=" + d2s(lambda), 0, threads);
    std::cout << "name,value,error\n";
    auto row = [&](const std::string& name, const semipart::PrecisionReal& v) {
      std::cout << name << "," << d2s(v.val()) << "," << d2s(v.err()) << "\n";
    };
    row("gamma", gamma);
    row("meissel_mertens", M);
    row("froberg_D", D);
    row("zeta_2", zeta2);
    row("zeta_3_2", zeta32);
    row("c1_theorem1", t1.c1);
    row("c2_theorem1", t1.c2);
    row("c3_theorem1", t1.c3);
    row("c4_theorem1", t1.c4);
    row("c1_theorem72", t72.c1);
    row("c2_theorem72", t72.c2);
    row("c3_theorem72", t72.c3);
    row("c4_theorem72", t72.c4);
  }
  return 0;
}

int run_saddle(std::uint64_t n, const std::string& set, bool as_json, unsigned threads) {
  const WeightConfig config = WeightConfig::from_token(set);
  const auto est = semipart::saddle_estimates(n, config);
  const auto& sol = est.solution;
  if (as_json) {
    nlohmann::json j;
    j["n"] = n;
    j["set"] = set;
    j["X"] = sol.X;
    j["rho"] = sol.rho;
    j["phi_moments"] = sol.phi_moments;
    j["log_psi"] = sol.log_psi;
    j["log_estimate"] = est.log_estimate;
    j["log_difference_estimate"] = est.log_difference_estimate;
    std::cout << j.dump(2) << "\n";
  } else {
    provenance(std::cout, "saddle", "n=" + std::to_string(n) + " set=" + set, 0, threads);
    std::cout << "field,value\n";
    std::cout << "X," << d2s(sol.X) << "\nrho," << d2s(sol.rho) << "\n";
    for (int m = 0; m <= 3; ++m)
      std::cout << "phi_moment_" << m << ","
                << d2s(sol.phi_moments[static_cast<std::size_t>(m)]) << "\n";
    std::cout << "log_estimate," << d2s(est.log_estimate) << "\n";
    std::cout << "log_difference_estimate," << d2s(est.log_difference_estimate) << "\n";
  }
  return 0;
}

int run_asympt(const std::string& set, std::vector<std::uint64_t> ns,
               std::uint64_t exact_limit, const std::string& csv, unsigned threads) {
  if (ns.empty()) throw std::domain_error("asympt: provide at least one --n");
  const WeightConfig config = WeightConfig::from_token(set);
  std::sort(ns.begin(), ns.end());
  const std::uint64_t need = ns.back();
  std::unique_ptr<semipart::PartitionSeries> series;
  if (need <= exact_limit)
    series = std::make_unique<semipart::PartitionSeries>(
        semipart::partition_series(config, need));
  else if (exact_limit >= 4)
    series = std::make_unique<semipart::PartitionSeries>(
        semipart::partition_series(config, exact_limit));

  const auto report = semipart::comparison_report(ns, config, series.get());
  OutputTarget out;
  out.open(csv);
  provenance(*out.os, "asympt",
             "set=" + set + " exact_limit=" + std::to_string(exact_limit), 0, threads);
  *out.os << "n,log_exact,log_saddle,log_thm1,log_thm72,fit_c3hat\n";
  const std::string fit =
      report.fit.valid ? d2s(report.fit.c3_hat) : std::string();
  for (const auto& row : report.rows) {
    *out.os << row.n << ",";
    if (std::isnan(row.log_exact))
      *out.os << "";
    else
      *out.os << d2s(row.log_exact);
    *out.os << "," << d2s(row.log_saddle) << "," << d2s(row.log_thm1) << ","
            << d2s(row.log_thm72) << "," << fit << "\n";
  }
  return report.partial ? 3 : 0;
}

int run_circle_recover(std::uint64_t n, const std::string& set, std::uint64_t samples,
                       double rho, unsigned threads) {
  const WeightConfig config = WeightConfig::from_token(set);
  semipart::CoefficientRecovery rec;
  if (samples == 0 && rho == 0.0) {
    rec = semipart::recover_coefficient_auto(n, config);
  } else {
    if (samples == 0 || rho == 0.0)
      throw std::domain_error("circle: give both --samples and --rho, or neither");
    rec = semipart::recover_coefficient(n, config, samples, rho);
  }
  provenance(std::cout, "circle", "n=" + std::to_string(n) + " set=" + set, 0, threads);
  std::cout << "n,count,samples,rho,alias_bound,fp_bound,accepted\n";
  std::cout << n << "," << (rec.accepted ? rec.rounded.get_str() : std::string()) << ","
            << rec.n_samples << "," << d2s(rec.rho) << ","
            << d2s(static_cast<double>(rec.alias_bound)) << ","
            << d2s(static_cast<double>(rec.fp_bound)) << "," << (rec.accepted ? 1 : 0)
            << "\n";
  if (!rec.accepted) {
    std::cerr << "circle: recovery refused, alias+fp bound "
              << static_cast<double>(rec.alias_bound + rec.fp_bound)
              << " >= 0.5 (raise --samples or lower --rho)\n";
    return 3;
  }
  return 0;
}

int run_circle_profile(double X, const std::string& set, std::uint64_t grid, double A,
                       bool allow_small_A, const std::string& csv, unsigned threads) {
  const WeightConfig config = WeightConfig::from_token(set);
  std::unique_ptr<semipart::ArcDecomposition> arcs;
  if (A > 0)
    arcs = std::make_unique<semipart::ArcDecomposition>(
        semipart::build_arcs(X, A, allow_small_A));
  const auto profile = semipart::profile_phi(X, config, grid, arcs.get());
  OutputTarget out;
  out.open(csv);
  std::ostringstream params;
  params << "X=" << d2s(X) << " set=" << set << " grid=" << grid << " A=" << d2s(A);
  provenance(*out.os, "circle-profile", params.str(), 0, threads);
  *out.os << "alpha,re_phi,abs_psi\n";
  for (const auto& row : profile.rows) {
    char psi[48];
    std::snprintf(psi, sizeof psi, "%.10Le", row.abs_psi);
    *out.os << d2s(row.alpha) << "," << d2s(row.re_phi) << "," << psi << "\n";
  }
  std::cerr << "phi(rho) = " << profile.phi_at_origin
            << ", max nonprincipal ratio = " << profile.max_ratio_nonprincipal << "\n";
  return 0;
}

int run_weyl(std::uint64_t X, std::size_t samples, std::uint64_t seed, const std::string& csv,
             unsigned threads) {
  const auto reports = semipart::bound_ratio_sweep(X, samples, seed, threads);
  OutputTarget out;
  out.open(csv);
  std::ostringstream params;
  params << "X=" << X << " samples=" << samples;
  provenance(*out.os, "weyl", params.str(), seed, threads);
  *out.os << "alpha,a,q,err,abs_s2,bound,ratio\n";
  for (const auto& rep : reports)
    *out.os << d2s(rep.alpha) << "," << rep.a << "," << rep.q << "," << d2s(rep.err) << ","
            << d2s(rep.abs_s2) << "," << d2s(rep.bound) << "," << d2s(rep.ratio) << "\n";
  return 0;
}

int run_laplace(double a, double lambda, double b, double L, bool pure_gamma,
                unsigned threads) {
  const auto rep = semipart::laplace_check(a, lambda, b, L, pure_gamma);
  provenance(std::cout, "laplace-check",
             "a=" + d2s(a) + " lambda=" + d2s(lambda) + " b=" + d2s(b) + " L=" + d2s(L), 0,
             threads);
  std::cout << "integral,formula,ratio,quadrature_error\n";
  std::cout << d2s(rep.integral) << "," << d2s(rep.formula) << "," << d2s(rep.ratio) << ","
            << d2s(rep.quadrature_error) << "\n";
  return 0;
}

int run_report(const std::string& out_path, const std::vector<int>& only, unsigned threads) {
  semipart::AcceptanceOptions options;
  options.threads = threads;
  const auto results = semipart::run_acceptance(options, only);
  const std::string md = semipart::acceptance_markdown(results);
  if (out_path.empty()) {
    std::cout << md;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::domain_error("cannot open output file: " + out_path);
    f << md;
  }
  bool all_pass = true;
  for (const auto& r : results) {
    std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ["
              << r.details << "]\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semipart: exact counting, saddle-point evaluation and circle-method "
               "verification for partitions into semiprimes"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = semipart::default_thread_count();
  app.add_option("--threads", threads, "worker threads for parallel sweeps");

  // sieve
  auto* sieve = app.add_subcommand("sieve", "semiprime parts or residue-class counts");
  std::uint64_t sieve_limit = 0, sieve_mod = 0;
  std::int64_t sieve_ell = -1;
  std::string sieve_csv;
  sieve->add_option("--limit", sieve_limit, "upper bound")->required();
  sieve->add_option("--mod", sieve_mod, "count by residue class mod q");
  sieve->add_option("--ell", sieve_ell, "restrict to one residue class");
  sieve->add_option("--csv", sieve_csv, "output path");

  // count
  auto* count = app.add_subcommand("count", "exact partition counts");
  std::string count_set = "p2";
  std::uint64_t count_nmax = 100;
  std::string count_csv;
  count->add_option("--set", count_set, "p2|p2ne|p2sharp")->required();
  count->add_option("--nmax", count_nmax, "largest n")->required();
  count->add_option("--csv", count_csv, "output path");

  // constants
  auto* constants = app.add_subcommand("constants", "high-precision constants");
  bool constants_json = false;
  double constants_lambda = 0.5;
  constants->add_flag("--json", constants_json, "emit JSON");
  constants->add_option("--lambda", constants_lambda, "lambda for the variant constants");

  // saddle
  auto* saddle = app.add_subcommand("saddle", "saddle solution and log estimates");
  std::uint64_t saddle_n = 0;
  std::string saddle_set = "p2";
  bool saddle_json = false;
  saddle->add_option("--n", saddle_n, "target n")->required();
  saddle->add_option("--set", saddle_set, "p2|p2ne|p2sharp");
  saddle->add_flag("--json", saddle_json, "emit JSON");

  // asympt
  auto* asympt = app.add_subcommand("asympt", "closed-form comparison report");
  std::string asympt_set = "p2";
  std::vector<std::uint64_t> asympt_ns;
  std::uint64_t asympt_exact_limit = 20000;
  std::string asympt_variant = "both";
  std::string asympt_csv;
  asympt->add_option("--set", asympt_set, "p2|p2ne|p2sharp");
  asympt->add_option("--n", asympt_ns, "target n values")->required();
  asympt->add_option("--exact-limit", asympt_exact_limit, "largest n for the exact series");
  asympt->add_option("--variant", asympt_variant, "both|thm1|thm72 (informational)");
  asympt->add_option("--csv", asympt_csv, "output path");

  // circle
  auto* circle = app.add_subcommand("circle", "coefficient recovery / Phi profile");
  std::uint64_t circle_n = 0, circle_samples = 0, circle_grid = 512;
  std::string circle_set = "p2";
  double circle_rho = 0.0, circle_X = 0.0, circle_A = 0.0;
  bool circle_profile = false, circle_small_A = false;
  std::string circle_csv;
  circle->add_option("--n", circle_n, "coefficient index");
  circle->add_option("--set", circle_set, "p2|p2ne|p2sharp");
  circle->add_option("--samples", circle_samples, "number of circle samples");
  circle->add_option("--rho", circle_rho, "sampling radius");
  circle->add_flag("--profile", circle_profile, "emit Re Phi profile instead");
  circle->add_option("--X", circle_X, "saddle parameter for --profile");
  circle->add_option("--grid", circle_grid, "profile grid size");
  circle->add_option("--A", circle_A, "arc exponent (builds the arc family)");
  circle->add_flag("--allow-small-a", circle_small_A, "permit A <= 18 (experimentation)");
  circle->add_option("--csv", circle_csv, "output path");

  // weyl
  auto* weyl = app.add_subcommand("weyl", "double Weyl sum bound sweep");
  std::uint64_t weyl_X = 0, weyl_seed = 42;
  std::size_t weyl_samples = 100;
  std::string weyl_csv;
  weyl->add_option("--X", weyl_X, "summation limit")->required();
  weyl->add_option("--samples", weyl_samples, "number of sampled frequencies");
  weyl->add_option("--seed", weyl_seed, "RNG seed");
  weyl->add_option("--csv", weyl_csv, "output path");

  // laplace-check
  auto* laplace = app.add_subcommand("laplace-check", "Laplace-integral law check");
  double lap_a = 1e-4, lap_lambda = 1.0, lap_b = 1.0, lap_L = 2.0;
  bool lap_pure = false;
  laplace->add_option("--a", lap_a, "decay parameter (0 < a <= 1e-2)")->required();
  laplace->add_option("--lambda", lap_lambda, "power of t")->required();
  laplace->add_option("--b", lap_b, "power of log t");
  laplace->add_option("--L", lap_L, "lower limit (> 1)");
  laplace->add_flag("--pure-gamma", lap_pure, "drop the loglog weight (Gamma identity)");

  // report
  auto* report = app.add_subcommand("report", "run the verification suite");
  std::string report_out;
  std::vector<int> report_only;
  report->add_option("--out", report_out, "markdown output path");
  report->add_option("--only", report_only, "criteria ids (default: all)");

  try {
    app.parse(argc, argv);
    if (sieve->parsed())
      return run_sieve(sieve_limit, sieve_mod, sieve_ell, sieve_csv, threads);
    if (count->parsed()) return run_count(count_set, count_nmax, count_csv, threads);
    if (constants->parsed()) return run_constants(constants_json, constants_lambda, threads);
    if (saddle->parsed()) return run_saddle(saddle_n, saddle_set, saddle_json, threads);
    if (asympt->parsed())
      return run_asympt(asympt_set, asympt_ns, asympt_exact_limit, asympt_csv, threads);
    if (circle->parsed()) {
      if (circle_profile)
        return run_circle_profile(circle_X, circle_set, circle_grid, circle_A, circle_small_A,
                                  circle_csv, threads);
      return run_circle_recover(circle_n, circle_set, circle_samples, circle_rho, threads);
    }
    if (weyl->parsed()) return run_weyl(weyl_X, weyl_samples, weyl_seed, weyl_csv, threads);
    if (laplace->parsed())
      return run_laplace(lap_a, lap_lambda, lap_b, lap_L, lap_pure, threads);
    if (report->parsed()) return run_report(report_out, report_only, threads);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const semipart::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
