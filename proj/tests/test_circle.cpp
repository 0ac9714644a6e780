#include <doctest.h>

#include <cmath>
#include <random>

#include "semipart/arith.hpp"
#include "semipart/circle.hpp"
#include "semipart/errors.hpp"
#include "semipart/partitions.hpp"
#include "semipart/weyl.hpp"

using namespace semipart;

TEST_SUITE("circle") {

TEST_CASE("arc construction guards") {
  CHECK_THROWS_AS(build_arcs(10.0, 1.5, true), std::domain_error);     // X < e^e
  CHECK_THROWS_AS(build_arcs(1000.0, 1.5, false), std::domain_error);  // A <= 18, no override
  CHECK_THROWS_AS(build_arcs(100.0, 2.0, true), std::domain_error);    // overlapping arcs
  CHECK_NOTHROW(build_arcs(1000.0, 1.5, true));
}

TEST_CASE("classification of rational and irrational frequencies") {
  const ArcDecomposition arcs = build_arcs(1000.0, 1.5, true);
  REQUIRE(arcs.Q >= 2.0);

  const auto origin = arcs.classify(0.0);
  REQUIRE(origin.has_value());
  CHECK(origin->q == 1);
  CHECK(origin->a == 0);
  CHECK(origin->principal());

  const auto half = arcs.classify(0.5);
  REQUIRE(half.has_value());
  CHECK(half->q == 2);
  CHECK(half->a == 1);

  // The golden ratio's fractional part sits on the minor arcs: its best
  // approximation with q <= Q is too far away relative to delta_q.
  const double golden = 0.6180339887498949;
  const RationalApprox approx =
      dirichlet_approx(golden, static_cast<std::uint64_t>(arcs.Q));
  CHECK(approx.err > arcs.Q / (static_cast<double>(approx.q) * arcs.X));
  CHECK(!arcs.classify(golden).has_value());
}

TEST_CASE("arcs are pairwise disjoint and their measure shrinks") {
  double prev_measure = 1e300;
  for (double X : {1e3, 1e4, 1e5}) {
    const ArcDecomposition arcs = build_arcs(X, 1.5, true);
    for (std::size_t i = 0; i + 1 < arcs.arcs.size(); ++i) {
      CHECK(arcs.arcs[i].center + arcs.arcs[i].half_width <=
            arcs.arcs[i + 1].center - arcs.arcs[i + 1].half_width);
    }
    const double measure = arcs.total_measure();
    CHECK(measure < prev_measure);
    CHECK(measure < 1.0);
    prev_measure = measure;
  }
}

TEST_CASE("coefficient recovery: spec anchors") {
  const PartitionSeries p2 = partition_series(WeightConfig::p2(), 16);
  const CoefficientRecovery ten = recover_coefficient(10, WeightConfig::p2(), 64, 0.5, &p2);
  CHECK(ten.accepted);
  CHECK(ten.rounded == 2);
  CHECK(ten.alias_bound < 0.5L);

  const CoefficientRecovery zero = recover_coefficient_auto(0, WeightConfig::p2());
  CHECK(zero.accepted);
  CHECK(zero.rounded == 1);

  const PartitionSeries sharp = partition_series(WeightConfig::p2_sharp(), 100);
  const CoefficientRecovery hundred = recover_coefficient_auto(100, WeightConfig::p2_sharp());
  CHECK(hundred.accepted);
  CHECK(hundred.rounded == sharp.counts[100]);

  CHECK_THROWS_AS(recover_coefficient(10, WeightConfig::p2(), 10, 0.5), std::domain_error);
  CHECK_THROWS_AS(recover_coefficient(10, WeightConfig::p2(), 64, 1.5), std::domain_error);
}

TEST_CASE("recovery refuses when the alias bound cannot certify") {
  // Radius far above the saddle: the alias terms dominate.
  const CoefficientRecovery rec =
      recover_coefficient(200, WeightConfig::p2_sharp(), 1024, std::exp(-1.0 / 200.0));
  CHECK(!rec.accepted);
  CHECK(rec.alias_bound + rec.fp_bound >= 0.5L);
}

TEST_CASE("recovery equals the DP across sets for n <= 64") {
  for (const WeightConfig& config :
       {WeightConfig::p2(), WeightConfig::p2_distinct(), WeightConfig::p2_sharp()}) {
    const PartitionSeries series = partition_series(config, 64);
    for (std::uint64_t n = 0; n <= 64; ++n) {
      const CoefficientRecovery rec = recover_coefficient_auto(n, config, &series);
      REQUIRE(rec.accepted);
      REQUIRE(rec.rounded == series.counts[n]);
    }
  }
}

TEST_CASE("ramanujan sums: hand values and the classical identity") {
  CHECK(ramanujan_sum(1, 0) == 1);
  CHECK(ramanujan_sum(4, 1) == 0);
  CHECK(ramanujan_sum(6, 1) == 1);

  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 200) {
    const std::uint64_t q = 1 + rng() % 10000;
    const std::uint64_t a = rng() % q;
    if (std::gcd(a == 0 ? q : a, q) != 1) continue;
    CHECK(ramanujan_sum(q, static_cast<std::int64_t>(a)) == mobius(q));
    ++checked;
  }
}

TEST_CASE("major-arc sums approach the closed form") {
  const MajorArcSum unit = major_arc_sum(1, 0, 1e6);
  CHECK(unit.closed_form == doctest::Approx(1.6449340668482264).epsilon(1e-12));
  CHECK(std::abs(unit.partial_sum - unit.closed_form) <= 2e-3);

  const MajorArcSum two = major_arc_sum(2, 1, 1e6);
  CHECK(two.closed_form == doctest::Approx(-1.6449340668482264 / 2).epsilon(1e-12));
  CHECK(std::abs(two.partial_sum - two.closed_form) <= 1e-2);

  const MajorArcSum six = major_arc_sum(6, 1, 1e6);
  CHECK(six.closed_form == doctest::Approx(1.6449340668482264 / 6).epsilon(1e-12));
  CHECK(std::abs(six.partial_sum - six.closed_form) <= 1e-2);

  CHECK_THROWS_AS(major_arc_sum(4, 2, 1e6), std::domain_error);
}

TEST_CASE("major-arc partial sums are Cauchy in the cutoff") {
  // |S(sqrt(X)) - S(2 sqrt(X))| ~ C X^{-1/2}; the fitted C stays small.
  for (std::uint64_t q : {1ull, 5ull, 12ull}) {
    const double s1 = major_arc_sum(q, 1, 1e4).partial_sum;
    const double s2 = major_arc_sum(q, 1, 4e4).partial_sum;
    CHECK(std::abs(s1 - s2) <= 10.0 / std::sqrt(1e4));
  }
}

TEST_CASE("phi profile structure at X = 100") {
  const PhiProfile profile = profile_phi(100.0, WeightConfig::p2_sharp(), 64);
  REQUIRE(profile.rows.size() == 64);

  double best_alpha = 1;
  double best_re = -1e300;
  for (const auto& row : profile.rows) {
    if (row.re_phi > best_re) {
      best_re = row.re_phi;
      best_alpha = row.alpha;
    }
  }
  CHECK(best_alpha == 0.0);  // the grid contains 0 and the peak sits there
  CHECK(best_re == doctest::Approx(profile.phi_at_origin).epsilon(1e-6));

  // Conjugate symmetry: matching +/- grid points carry the same Re Phi.
  for (std::size_t i = 1; i < profile.rows.size() / 2; ++i) {
    const auto& neg = profile.rows[i];
    const auto& pos = profile.rows[profile.rows.size() - i];
    CHECK(neg.alpha == doctest::Approx(-pos.alpha));
    CHECK(neg.re_phi == doctest::Approx(pos.re_phi).epsilon(1e-9));
  }
  CHECK_THROWS_AS(profile_phi(50.0, WeightConfig::p2(), 64), std::domain_error);
}

}  // TEST_SUITE
