#include <doctest.h>

#include "../oracle/oracle.h"
#include "../support.h"

using namespace lune;
using support::pi;

namespace {

ZeroConfiguration fig_config() { return ZeroConfiguration({0.0, pi / 2, 3 * pi / 2}, {1, 1, 1}); }

ZeroConfiguration roots_of_unity(std::size_t n) {
  std::vector<double> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = 2 * pi * static_cast<double>(k) / static_cast<double>(n);
  return ZeroConfiguration(a, std::vector<int>(n, 1));
}

std::vector<double> gaps(const ZeroConfiguration& c) {
  std::vector<double> out;
  for (const auto& ch : consecutive_pairs(c)) out.push_back(ch.alpha());
  return out;
}

double mod_two_pi_distance(double x) {
  const double r = normalize_angle(x);
  return std::min(r, 2 * pi - r);
}

WeightVector random_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  for (auto& x : w) x /= total;
  return WeightVector(w);
}

}  // namespace

TEST_SUITE("chords and gaps") {
  TEST_CASE("consecutive pairs") {
    const auto g = gaps(fig_config());
    REQUIRE(g.size() == 3);
    CHECK(g[0] == doctest::Approx(pi / 2));
    CHECK(g[1] == doctest::Approx(pi));
    CHECK(g[2] == doctest::Approx(pi / 2));
    for (double x : gaps(roots_of_unity(7))) CHECK(std::abs(x - 2 * pi / 7) <= 1e-12);
    const auto two = gaps(ZeroConfiguration({0.0, pi / 4}, {1, 1}));
    CHECK(two[0] == doctest::Approx(pi / 4));
    CHECK(two[1] == doctest::Approx(7 * pi / 4));
    const auto wrap = consecutive_pairs(fig_config()).back();
    CHECK(wrap.theta_plus() == doctest::Approx(2 * pi));
    CHECK_THROWS_AS(consecutive_pairs(ZeroConfiguration({1.0}, {3})), SingleDistinctZero);
  }

  TEST_CASE("gaps sum to 2pi") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
      const auto inst = support::random_instance(rng, 50, 4, 1e-4, 1e-6);
      if (inst.config.distinct_count() < 2) continue;
      double s = 0.0;
      for (double x : gaps(inst.config)) s += x;
      CHECK(std::abs(s - 2 * pi) <= 1e-12);
    }
  }

  TEST_CASE("max gap") {
    const auto g = max_gap(fig_config());
    CHECK(g.gap == doctest::Approx(pi));
    CHECK(std::abs(g.chord.z() - Complex{0.0, 1.0}) <= 1e-15);
    CHECK(std::abs(g.chord.z_plus() - Complex{0.0, -1.0}) <= 1e-15);
    CHECK(max_gap(roots_of_unity(5)).gap == doctest::Approx(2 * pi / 5));
    const auto two = max_gap(ZeroConfiguration({0.0, pi / 4}, {1, 1}));
    CHECK(two.gap == doctest::Approx(7 * pi / 4));
    CHECK(two.chord.theta() == doctest::Approx(pi / 4));
    // Ties go to the smallest starting angle.
    CHECK(max_gap(ZeroConfiguration({0.0, pi}, {1, 1})).chord.theta() == 0.0);
  }
}

TEST_SUITE("angle duality") {
  TEST_CASE("three zeros, uniform weights") {
    const auto c = fig_config();
    const auto r = verify_angle_duality(c, WeightVector::uniform(3), consecutive_pairs(c)[0]);
    REQUIRE(r.per_root_angles.size() == 2);
    std::vector<double> a{r.per_root_angles[0].value, r.per_root_angles[1].value};
    std::sort(a.begin(), a.end());
    CHECK(std::abs(a[0] - 3 * pi / 8) <= 1e-12);
    CHECK(std::abs(a[1] - 7 * pi / 8) <= 1e-12);
    CHECK(std::abs(r.angle_sum - 5 * pi / 4) <= 1e-12);
    CHECK(r.rhs == doctest::Approx(5 * pi / 4).epsilon(1e-15));
    CHECK(r.residual <= 1e-12);
  }

  TEST_CASE("roots of unity collapse to the origin") {
    // L_lambda = u^{N-1}: a root of multiplicity N-1 that double precision splits into a
    // cluster. Theta has gradient at most 2 near the origin, so the residual is bounded
    // by twice the computed spread; the congruence oracle checks the identity exactly.
    for (std::size_t n : {2u, 3u, 5u, 8u, 12u}) {
      const auto c = roots_of_unity(n);
      const auto w = WeightVector::uniform(n);
      const auto chord = consecutive_pairs(c)[0];
      const auto r = verify_angle_duality(c, w, chord);
      CHECK(r.rhs == doctest::Approx(2 * pi - 2 * pi / static_cast<double>(n)));
      double spread = 0.0;
      for (const auto& x : roots_of_combination(c, w).roots) spread = std::max(spread, std::abs(x));
      CHECK(r.residual <= std::max(1e-12, 2 * spread));
      if (n == 2) CHECK(r.residual <= 1e-12);
      CHECK(mod_two_pi_distance(duality_congruence_oracle(c, w, chord)) <= 1e-12);
    }
  }

  TEST_CASE("skewed weights on u^3 - 1 against closed-form roots") {
    const auto c = roots_of_unity(3);
    const WeightVector w({0.8, 0.1, 0.1});
    const auto chord = consecutive_pairs(c)[0];
    const auto r = verify_angle_duality(c, w, chord);
    CHECK(r.residual <= 1e-9);
    const auto [a, b] = oracle::quadratic_roots(0.7, 0.7);
    const double direct = oracle::angle_at(a, chord.z(), chord.z_plus()) + oracle::angle_at(b, chord.z(), chord.z_plus());
    CHECK(std::abs(direct - r.rhs) <= 1e-12);
    CHECK(std::abs(direct - r.angle_sum) <= 1e-12);
  }

  TEST_CASE("refusals") {
    const auto c = fig_config();
    const auto chord = consecutive_pairs(c)[0];
    CHECK_THROWS_AS(verify_angle_duality(c, WeightVector({0.0, 0.5, 0.5}), chord), HypothesisViolation);
    CHECK_THROWS_AS(verify_angle_duality_all(c, WeightVector({0.0, 0.5, 0.5})), HypothesisViolation);
    CHECK_THROWS_AS(verify_angle_duality(c, WeightVector::uniform(3), ChordArc(0.1, 0.2)), std::invalid_argument);
  }

  TEST_CASE("repeated zeros take the endpoint convention") {
    const ZeroConfiguration c({0.0, pi / 2}, {3, 2});
    const auto reports = verify_angle_duality_all(c, WeightVector::uniform(5));
    for (const auto& r : reports) {
      CHECK(r.residual <= 1e-9);
      std::size_t endpoint = 0;
      for (const auto& a : r.per_root_angles) endpoint += a.endpoint_case;
      CHECK(endpoint == 3);  // m - 1 copies at each zero
    }
  }
}

TEST_SUITE("congruence oracle") {
  TEST_CASE("examples") {
    const auto c = fig_config();
    CHECK(mod_two_pi_distance(duality_congruence_oracle(c, WeightVector::uniform(3), consecutive_pairs(c)[0])) <= 1e-9);
    std::mt19937_64 rng(32);
    const auto five = roots_of_unity(5);
    for (int i = 0; i < 20; ++i) {
      const auto w = random_weights(rng, 5);
      for (const auto& chord : consecutive_pairs(five)) {
        const double v = duality_congruence_oracle(five, w, chord);
        CHECK(v >= 0.0);
        CHECK(v < 2 * pi);
        CHECK(mod_two_pi_distance(v) <= 1e-9);
      }
    }
  }

  TEST_CASE("agrees with the root-based residual") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
      std::uniform_int_distribution<std::size_t> nd(2, 20);
      std::uniform_real_distribution<double> ang(0.0, 2 * pi);
      const std::size_t n = nd(rng);
      std::vector<double> a(n);
      for (auto& x : a) x = ang(rng);
      const auto c = ZeroConfiguration::from_expanded(a);
      if (!c.all_simple()) continue;
      const auto w = random_weights(rng, n);
      const auto reports = verify_angle_duality_all(c, w);
      const auto chords = consecutive_pairs(c);
      for (std::size_t r = 0; r < chords.size(); ++r) {
        const double oracle_value = duality_congruence_oracle(c, w, chords[r]);
        CHECK(mod_two_pi_distance(oracle_value) <= 1e-9);
        CHECK(mod_two_pi_distance(reports[r].angle_sum - reports[r].rhs - oracle_value) <= 1e-8);
      }
    }
  }

  TEST_CASE("errors") {
    const ZeroConfiguration c({0.0, 1.0}, {2, 1});
    CHECK_THROWS_AS(duality_congruence_oracle(c, WeightVector::uniform(3), consecutive_pairs(c)[0]),
                    std::invalid_argument);
    const auto f = fig_config();
    CHECK_THROWS_AS(duality_congruence_oracle(f, WeightVector({0.0, 0.5, 0.5}), consecutive_pairs(f)[0]),
                    HypothesisViolation);
  }
}

TEST_SUITE("gap principle") {
  TEST_CASE("count interior") {
    const std::vector<Complex> zeros{0.0, 0.0, 0.0};
    CHECK(count_interior(zeros, 0.5) == 3);
    const std::vector<Complex> crit{{1.0 / 3, std::sqrt(2.0) / 3}, {1.0 / 3, -std::sqrt(2.0) / 3}};
    CHECK(count_interior(crit, 0.25) == 2);
    CHECK(count_interior(crit, 0.5) == 0);
    const std::vector<Complex> edge{0.5};
    CHECK(count_interior(edge, 0.5) == 0);
    CHECK_THROWS_AS(count_interior(zeros, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(count_interior(zeros, 1.0), std::invalid_argument);
  }

  TEST_CASE("three zeros, eps 0.25") {
    const auto r = verify_gap_principle(fig_config(), WeightVector::uniform(3), 0.25);
    CHECK(r.max_gap == doctest::Approx(pi));
    CHECK(r.interior_count == 2);
    CHECK(r.bound == doctest::Approx(16.0));
    CHECK(r.satisfied);
    CHECK(r.intermediate_satisfied);
  }

  TEST_CASE("single distinct zero is trivial") {
    for (double eps : {0.05, 0.5, 0.9}) {
      const auto r = verify_gap_principle(ZeroConfiguration({2.0}, {6}), WeightVector::uniform(6), eps);
      CHECK(r.trivial);
      CHECK(r.interior_count == 0);
      CHECK(r.satisfied);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(verify_gap_principle(fig_config(), WeightVector({0.0, 0.5, 0.5}), 0.1), HypothesisViolation);
    CHECK_THROWS_AS(verify_gap_principle(fig_config(), WeightVector::uniform(3), 1.5), std::invalid_argument);
  }

  TEST_CASE("random instances") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 300; ++i) {
      const auto inst = support::random_instance(rng, 30, 4, 1e-4, 1e-6);
      const auto roots = roots_of_combination(inst.config, inst.weights);
      for (double eps : {0.05, 0.1, 0.25, 0.5}) {
        const auto r = gap_report(inst.config, roots.roots, eps);
        CHECK(r.satisfied == (static_cast<double>(r.interior_count) <= r.bound));
        CHECK(r.satisfied);
        CHECK(r.intermediate_satisfied);
        CHECK(r.bound == doctest::Approx(4 * pi / (eps * r.max_gap)));
      }
    }
  }
}

TEST_SUITE("counterexamples") {
  TEST_CASE("vanishing weight") {
    const auto ce = zero_weight_counterexample();
    REQUIRE(ce.roots.size() == 2);
    const std::vector<Complex> expected{0.0, 1.0};
    CHECK(bottleneck_distance(ce.roots, expected) <= 1e-15);
    CHECK(std::abs(ce.report.angle_sum - 3 * pi / 4) <= 1e-15);
    CHECK(std::abs(ce.report.rhs - 5 * pi / 4) <= 1e-15);
    CHECK(ce.identity_fails);
  }

  TEST_CASE("Sendov-type distance") {
    const auto d = sendov_distance(roots_of_unity(3), WeightVector({0.8, 0.1, 0.1}));
    REQUIRE(d.size() == 3);
    CHECK(std::abs(d[0].zero - Complex{1.0, 0.0}) <= 1e-15);
    CHECK(std::abs(d[0].distance - std::sqrt(12.0 / 5.0)) <= 1e-10);
    CHECK(d[0].distance > 1.0);
  }

  TEST_CASE("roots of unity sit at distance one") {
    for (std::size_t n : {2u, 3u, 4u, 6u, 9u}) {
      const auto c = roots_of_unity(n);
      double spread = 0.0;
      for (const auto& x : roots_of_combination(c, WeightVector::uniform(n)).roots)
        spread = std::max(spread, std::abs(x));
      for (const auto& d : sendov_distance(c, WeightVector::uniform(n)))
        CHECK(std::abs(d.distance - 1.0) <= std::max(1e-15, spread));
    }
  }

  TEST_CASE("uniform weights match critical points") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 100; ++i) {
      const auto inst = support::random_instance(rng, 10, 1, 1e-4, 0.05);
      const std::size_t n = inst.config.degree();
      const auto crit = find_roots(derivative(zero_polynomial(inst.config)).to_monic());
      const auto d = sendov_distance(inst.config, WeightVector::uniform(n));
      for (const auto& entry : d) {
        double best = 1e300;
        for (const auto& w : crit.roots) best = std::min(best, std::abs(entry.zero - w));
        CHECK(std::abs(best - entry.distance) <= 1e-8);
      }
    }
  }

  TEST_CASE("refuses nonpositive weights") {
    CHECK_THROWS_AS(sendov_distance(fig_config(), WeightVector({0.0, 0.5, 0.5})), HypothesisViolation);
  }
}

TEST_SUITE("theorem properties") {
  TEST_CASE("duality, lune and hull confinement on random instances") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 300; ++i) {
      const auto inst = support::random_instance(rng, 50, 4, 1e-4, 1e-6);
      if (inst.config.distinct_count() < 2) continue;
      const auto roots = roots_of_combination(inst.config, inst.weights);
      const auto expanded = inst.config.expanded_zeros();
      for (const auto& chord : consecutive_pairs(inst.config)) {
        CHECK(angle_sum_report(roots.roots, chord, inst.config.degree()).residual <= kDualityResidualBudget);
        for (const auto& w : roots.roots) CHECK(in_lune(w, chord));
      }
      for (const auto& w : roots.roots) CHECK(convex_hull_contains(expanded, w));
    }
  }

  TEST_CASE("uniform weights reproduce the critical-point statement") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
      const auto inst = support::random_instance(rng, 10, 1, 1e-4, 0.05);
      const std::size_t n = inst.config.degree();
      const auto crit = find_roots(derivative(zero_polynomial(inst.config)).to_monic());
      const auto reports = verify_angle_duality_all(inst.config, WeightVector::uniform(n));
      const auto chords = consecutive_pairs(inst.config);
      for (std::size_t r = 0; r < chords.size(); ++r) {
        const auto sub = angle_sum_report(crit.roots, chords[r], n);
        CHECK(std::abs(sub.angle_sum - reports[r].angle_sum) <= 1e-8);
        CHECK(sub.residual <= 1e-8);
      }
    }
  }
}
