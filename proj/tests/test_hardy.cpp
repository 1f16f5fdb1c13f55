#include "doctest.h"

#include <cmath>
#include <random>

#include "biphoton/hardy.hpp"
#include "biphoton/io.hpp"
#include "biphoton/source.hpp"

using namespace biphoton;

TEST_CASE("hardy_angles at the published operating point") {
  HardyAngles a = hardy_angles(0.470);
  CHECK(a.alpha_deg == doctest::Approx(55.5668110253).epsilon(1e-9));
  CHECK(a.beta_mag_deg == doctest::Approx(72.1402410383).epsilon(1e-9));
  CHECK(a.beta_signed_deg() == doctest::Approx(-72.1402410383).epsilon(1e-9));
}

TEST_CASE("hardy_angles limits and errors") {
  HardyAngles near_max = hardy_angles(0.9999);
  CHECK(near_max.alpha_deg == doctest::Approx(45.0).epsilon(1e-2));
  CHECK(near_max.beta_mag_deg == doctest::Approx(45.0).epsilon(1e-2));
  CHECK_THROWS_AS(hardy_angles(0.0), DegenerateEntanglementError);
  CHECK_THROWS_AS(hardy_angles(1.0), DegenerateEntanglementError);
  CHECK_THROWS_AS(hardy_angles(1.5), DegenerateEntanglementError);
}

TEST_CASE("zero conditions hold across the epsilon range") {
  for (int i = 1; i <= 50; ++i) {
    double eps = 0.02 + (0.98 - 0.02) * (i - 1) / 49.0;
    auto settings = hardy_settings(eps);
    DensityMatrix rho = density_from_pure(state_from_epsilon(eps, 0.0));
    for (int k = 1; k < 4; ++k) {
      double p = coincidence_probability(rho, settings[k].first, settings[k].second);
      CHECK(p < 1e-10);
    }
    // and the tested pair stays strictly positive
    CHECK(coincidence_probability(rho, settings[0].first, settings[0].second) > 0.0);
  }
}

TEST_CASE("hardy_fraction agrees with its closed form") {
  for (int i = 1; i < 100; ++i) {
    double eps = i / 100.0;
    CHECK(hardy_fraction(eps) ==
          doctest::Approx(hardy_fraction_closed_form(eps)).epsilon(1e-10));
  }
  CHECK(hardy_fraction(0.470) == doctest::Approx(0.0901370110).epsilon(1e-7));
  CHECK(hardy_fraction(0.999) < 1e-5);
  // value pinned by both evaluation routes
  CHECK(hardy_fraction(0.1) == doctest::Approx(0.0096845815).epsilon(1e-7));
}

TEST_CASE("find_optimal_epsilon") {
  OptimalEpsilon opt = find_optimal_epsilon(1e-6);
  double analytic_max = (5.0 * std::sqrt(5.0) - 11.0) / 2.0;
  CHECK(opt.fraction_star == doctest::Approx(analytic_max).epsilon(1e-8));
  CHECK(opt.epsilon_star > 0.45);
  CHECK(opt.epsilon_star < 0.48);
  CHECK(hardy_fraction(opt.epsilon_star + 0.01) < opt.fraction_star);
  CHECK(hardy_fraction(opt.epsilon_star - 0.01) < opt.fraction_star);
  CHECK_THROWS_AS(find_optimal_epsilon(0.0), std::invalid_argument);
}

TEST_CASE("optimal epsilon against a dense grid oracle") {
  double best_eps = 0.0, best_f = 0.0;
  for (double eps = 1e-5; eps < 1.0; eps += 1e-5) {
    double f = hardy_fraction_closed_form(eps);
    if (f > best_f) {
      best_f = f;
      best_eps = eps;
    }
  }
  OptimalEpsilon opt = find_optimal_epsilon(1e-6);
  CHECK(opt.fraction_star == doctest::Approx(best_f).epsilon(1e-8));
  CHECK(std::abs(opt.epsilon_star - best_eps) < 1e-4);
}

TEST_CASE("hardy_band") {
  double f = hardy_fraction(0.470);
  auto [lo0, hi0] = hardy_band(0.470, 0.0);
  CHECK(lo0 == doctest::Approx(f));
  CHECK(hi0 == doctest::Approx(f));

  auto [lo, hi] = hardy_band(0.470, 0.5);
  CHECK(lo < f);
  CHECK(hi > f);
  CHECK(hi - lo > 0.0);

  // width is monotone in the uncertainty
  auto [lo2, hi2] = hardy_band(0.470, 1.0);
  CHECK(hi2 - lo2 >= hi - lo);

  // parallel scan and serial reference agree exactly
  auto serial = hardy_band_serial(0.470, 0.5);
  CHECK(serial.first == lo);
  CHECK(serial.second == hi);

  CHECK_THROWS_AS(hardy_band(0.470, -0.5), std::invalid_argument);
}

TEST_CASE("mirror_epsilon") {
  CHECK(mirror_epsilon(2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(mirror_epsilon(0.0), std::invalid_argument);
  // the mirrored state gives the same Hardy fraction (H<->V relabel)
  CHECK(hardy_fraction(mirror_epsilon(2.0)) == doctest::Approx(hardy_fraction(0.5)));
}

TEST_CASE("hardy_test on the published counts") {
  auto fixture = io::hardy_fixture_from_file(std::string(FIXTURE_DIR) +
                                             "/hardy_paper_counts.json");
  HardyResult r = hardy_test(io::hardy_fixture_records(fixture), fixture.totals);
  CHECK(r.probabilities[0] == doctest::Approx(0.092).epsilon(1e-6));
  CHECK(r.violation == doctest::Approx(0.0776).epsilon(1e-6));
  CHECK(r.sigma == doctest::Approx(122.05).epsilon(1e-2));
  CHECK(r.signed_significance() > 0.0);
}

TEST_CASE("hardy_test validation and scaling") {
  auto fixture = io::hardy_fixture_from_file(std::string(FIXTURE_DIR) +
                                             "/hardy_paper_counts.json");
  auto records = io::hardy_fixture_records(fixture);

  // wrong labels rejected
  auto bad = records;
  bad[2].setting_2 = AnalyzerSetting::linear(10.0);
  CHECK_THROWS_AS(hardy_test(bad, fixture.totals), std::invalid_argument);
  CHECK_THROWS_AS(hardy_test(records, {0.0, 1.0, 1.0, 1.0}), std::invalid_argument);

  // doubling all counts and totals scales sigma by sqrt(2)
  auto doubled = records;
  std::array<double, 4> totals2 = fixture.totals;
  for (int k = 0; k < 4; ++k) {
    doubled[k].coincidences *= 2;
    totals2[k] *= 2.0;
  }
  HardyResult r = hardy_test(records, fixture.totals);
  HardyResult r2 = hardy_test(doubled, totals2);
  CHECK(r2.sigma == doctest::Approx(r.sigma * std::sqrt(2.0)).epsilon(1e-9));
  CHECK(r2.violation == doctest::Approx(r.violation).epsilon(1e-12));

  // zero minima: sigma driven by the Hardy count alone
  auto clean = records;
  for (int k = 1; k < 4; ++k) clean[k].coincidences = 0;
  HardyResult rc = hardy_test(clean, fixture.totals);
  CHECK(rc.violation == doctest::Approx(rc.probabilities[0]));
  CHECK(rc.sigma == doctest::Approx(std::sqrt(static_cast<double>(clean[0].coincidences))));
}

TEST_CASE("significance averages to zero at the local-realism boundary") {
  // simulate counts whose means satisfy p_bb = p_aa + p_ba' + p_a'b exactly
  auto settings = hardy_settings(0.470);
  std::array<double, 4> probs = {0.006, 0.002, 0.002, 0.002};
  const double total = 2.0e5;
  double acc = 0.0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    std::mt19937_64 rng(mix_seed(777, s));
    auto draw = [&](int k) {
      std::poisson_distribution<long long> pois(probs[k] * total);
      return CountRecord{settings[k].first, settings[k].second, pois(rng), 1.0};
    };
    std::array<CountRecord, 4> recs{draw(0), draw(1), draw(2), draw(3)};
    acc += hardy_test(recs, {total, total, total, total}).signed_significance();
  }
  CHECK(std::abs(acc / seeds) < 0.3);
}
