#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <random>

#include "epigame/vaccination.hpp"

using namespace epigame;

namespace {

VaccineProfile alpha_profile() {
  VaccineProfile v;
  v.efficiency = 0.76;
  v.duration = 49.0;
  return v;
}

VaccineProfile beta_profile() {
  VaccineProfile v;
  v.efficiency = 0.95;
  v.duration = 35.0;
  v.available_from = 28.0;
  return v;
}

AvailabilityParams paper_params(int n) {
  AvailabilityParams ap;
  ap.n_players = n;
  ap.benefit_alpha = 9.0;
  ap.benefit_beta = 10.0;
  ap.infection_cost = 1000.0;
  ap.t0 = 28.0;
  ap.discount = {0.999, LogConvention::natural};
  return ap;
}

double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("discount spec") {
  CHECK_THROWS_AS(DiscountSpec{1.0}.log_delta(), std::invalid_argument);
  CHECK_THROWS_AS(DiscountSpec{0.0}.log_delta(), std::invalid_argument);
  const DiscountSpec natural{0.999, LogConvention::natural};
  const DiscountSpec base10{0.999, LogConvention::base10};
  CHECK(natural.log_delta() == doctest::Approx(std::log(0.999)));
  CHECK(base10.log_delta() * std::log(10.0) == doctest::Approx(natural.log_delta()));
}

TEST_CASE("protection windows") {
  const UtilityPair u = duration_efficiency_utilities(alpha_profile(), beta_profile());
  CHECK(u.alpha == doctest::Approx(37.24).epsilon(1e-12));
  CHECK(u.beta == doctest::Approx(33.25).epsilon(1e-12));
  CHECK(choose_vaccine(u) == VaccineChoice::alpha);

  VaccineProfile zero = alpha_profile();
  zero.duration = 0.0;
  CHECK(duration_efficiency_utilities(zero, beta_profile()).alpha == 0.0);

  VaccineProfile matched = beta_profile();
  matched.efficiency = 1.1;
  CHECK_THROWS(duration_efficiency_utilities(alpha_profile(), matched));
  matched.efficiency = 0.95;
  matched.duration = 0.76 * 49.0 / 0.95;  // e*d tie by construction
  const UtilityPair tie = duration_efficiency_utilities(alpha_profile(), matched);
  CHECK(choose_vaccine(tie, 1e-12) == VaccineChoice::tie);
}

TEST_CASE("discounted open-ended protection") {
  const DiscountSpec base10{0.999, LogConvention::base10};
  const DiscountSpec natural{0.999, LogConvention::natural};
  const UtilityPair u =
      availability_efficiency_utilities(alpha_profile(), beta_profile(), base10);
  CHECK(u.alpha == doctest::Approx(1749.0895424367848).epsilon(1e-12));
  CHECK(u.beta == doctest::Approx(2125.9631208995247).epsilon(1e-12));
  CHECK(std::abs(u.alpha - 1749.0) <= 1.0);
  CHECK(std::abs(u.beta - 2126.0) <= 1.0);
  CHECK(choose_vaccine(u) == VaccineChoice::beta);

  SUBCASE("conventions rescale by ln(10) and agree on the choice") {
    const UtilityPair n =
        availability_efficiency_utilities(alpha_profile(), beta_profile(), natural);
    CHECK(n.alpha * std::log(10.0) == doctest::Approx(u.alpha).epsilon(1e-12));
    CHECK(n.beta * std::log(10.0) == doctest::Approx(u.beta).epsilon(1e-12));
    CHECK(choose_vaccine(n) == choose_vaccine(u));
  }

  SUBCASE("no availability gap reduces to the efficiency ratio") {
    VaccineProfile b = beta_profile();
    b.available_from = 0.0;
    const UtilityPair even =
        availability_efficiency_utilities(alpha_profile(), b, natural);
    CHECK(even.beta / even.alpha == doctest::Approx(0.95 / 0.76).epsilon(1e-12));
  }

  SUBCASE("waiting longer always hurts the later vaccine") {
    double previous = 1e300;
    for (double t0 : {0.0, 7.0, 28.0, 90.0, 365.0}) {
      VaccineProfile b = beta_profile();
      b.available_from = t0;
      const double value =
          availability_efficiency_utilities(alpha_profile(), b, natural).beta;
      CHECK(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("discounted finite protection windows") {
  const DiscountSpec base10{0.999, LogConvention::base10};
  const UtilityPair u = duration_efficiency_availability_utilities(
      alpha_profile(), beta_profile(), base10);
  CHECK(u.alpha == doctest::Approx(83.68031622413213).epsilon(1e-12));
  CHECK(u.beta == doctest::Approx(73.15756497446466).epsilon(1e-12));
  CHECK(std::abs(u.alpha - 84.0) <= 1.0);
  CHECK(std::abs(u.beta - 73.0) <= 1.0);
  CHECK(choose_vaccine(u) == VaccineChoice::alpha);

  SUBCASE("equal windows and no delay reduce to the efficiency comparison") {
    VaccineProfile a = alpha_profile(), b = beta_profile();
    a.duration = b.duration = 40.0;
    b.available_from = 0.0;
    const DiscountSpec natural{0.999, LogConvention::natural};
    const UtilityPair even = duration_efficiency_availability_utilities(a, b, natural);
    CHECK(choose_vaccine(even) == VaccineChoice::beta);  // 0.95 beats 0.76
    CHECK(even.beta / even.alpha == doctest::Approx(0.95 / 0.76).epsilon(1e-12));
  }
}

TEST_CASE("closed forms match quadrature of their integrals") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> efficiency(0.05, 1.0);
  std::uniform_real_distribution<double> duration(0.0, 200.0);
  std::uniform_real_distribution<double> availability(0.0, 100.0);
  std::uniform_real_distribution<double> discount(0.5, 0.9995);

  for (int i = 0; i < 100; ++i) {
    VaccineProfile a, b;
    a.efficiency = efficiency(rng);
    a.duration = duration(rng);
    b.efficiency = efficiency(rng);
    b.duration = duration(rng);
    b.available_from = availability(rng);
    const double delta = discount(rng);
    const DiscountSpec natural{delta, LogConvention::natural};

    const UtilityPair w1 = duration_efficiency_utilities(a, b);
    const UtilityPair q1 = duration_efficiency_utilities_by_quadrature(a, b);
    CHECK(rel_gap(w1.alpha, q1.alpha) <= 1e-9);
    CHECK(rel_gap(w1.beta, q1.beta) <= 1e-9);

    const UtilityPair w2 = availability_efficiency_utilities(a, b, natural);
    const UtilityPair q2 = availability_efficiency_utilities_by_quadrature(a, b, delta);
    CHECK(rel_gap(w2.alpha, q2.alpha) <= 1e-9);
    CHECK(rel_gap(w2.beta, q2.beta) <= 1e-9);

    const UtilityPair w3 = duration_efficiency_availability_utilities(a, b, natural);
    const UtilityPair q3 =
        duration_efficiency_availability_utilities_by_quadrature(a, b, delta);
    CHECK(rel_gap(w3.alpha, q3.alpha) <= 1e-9);
    CHECK(rel_gap(w3.beta, q3.beta) <= 1e-9);
  }
}

TEST_CASE("side effects") {
  VaccineProfile a = alpha_profile(), b = beta_profile();
  a.benefit = b.benefit = 100.0;
  a.infection_cost = b.infection_cost = 1000.0;
  a.side_effect_cost = b.side_effect_cost = 1000.0;
  b.side_effect_prob = 0.001;

  const UtilityPair u = side_effect_utilities(a, b);
  CHECK(u.alpha == doctest::Approx(-140.0).epsilon(1e-12));
  CHECK(u.beta == doctest::Approx(49.0).epsilon(1e-12));
  CHECK(choose_vaccine(u) == VaccineChoice::beta);

  SUBCASE("identical profiles tie") {
    VaccineProfile c = a;
    const UtilityPair even = side_effect_utilities(a, c);
    CHECK(choose_vaccine(even) == VaccineChoice::tie);
  }

  SUBCASE("a perfect riskless vaccine keeps its full benefit") {
    VaccineProfile perfect = a;
    perfect.efficiency = 1.0;
    CHECK(side_effect_utilities(perfect, b).alpha == doctest::Approx(100.0));
  }
}

TEST_CASE("choice is invariant under positive rescaling") {
  const UtilityPair u{37.24, 33.25};
  for (double scale : {1e-6, 0.5, 3.0, 1e9}) {
    CHECK(choose_vaccine({u.alpha * scale, u.beta * scale}) == VaccineChoice::alpha);
  }
  CHECK_THROWS_AS(choose_vaccine({std::nan(""), 1.0}), std::invalid_argument);
}

TEST_CASE("preference profiles") {
  const PreferenceProfile profile({0.0, 0.5, 1.0}, 28.0);
  CHECK(profile.time(1) == doctest::Approx(14.0));
  CHECK(profile.sorted_times() == std::vector<double>{0.0, 14.0, 28.0});
  CHECK(profile.rank(0, TieRank::last) == 1);
  CHECK(profile.rank(1, TieRank::last) == 2);
  CHECK(profile.rank(2, TieRank::last) == 3);

  const PreferenceProfile even({0.4, 0.4, 0.4}, 28.0);
  CHECK(even.rank(1, TieRank::last) == 3);
  CHECK(even.rank(1, TieRank::first) == 1);

  CHECK_THROWS_AS(PreferenceProfile({1.5}, 28.0), std::invalid_argument);
  CHECK_THROWS_AS(profile.rank(3, TieRank::last), std::invalid_argument);
  const AvailabilityParams ap = paper_params(3);
  CHECK_THROWS(availability_utility_direct(ap, profile, 7));
  CHECK_THROWS(availability_utility_closed(ap, profile, 7));
}

TEST_CASE("utility from the defining integrals") {
  SUBCASE("single immediate player gets the whole benefit stream") {
    const AvailabilityParams ap = paper_params(1);
    const PreferenceProfile profile({0.0}, ap.t0);
    CHECK(availability_utility_direct(ap, profile, 0) ==
          doctest::Approx(8995.499249624761).epsilon(1e-9));
    CHECK(availability_utility_closed(ap, profile, 0) ==
          doctest::Approx(8995.499249624761).epsilon(1e-9));
  }

  SUBCASE("no infection cost leaves only the benefit integral") {
    AvailabilityParams ap = paper_params(3);
    ap.infection_cost = 0.0;
    const PreferenceProfile profile({0.2, 0.6, 1.0}, ap.t0);
    for (std::size_t n = 0; n < 3; ++n) {
      const double direct = availability_utility_direct(ap, profile, n);
      const double benefit_only = availability_utility_telescoped(ap, profile, n);
      CHECK(rel_gap(direct, benefit_only) <= 1e-9);
    }
  }

  SUBCASE("three staggered players, frozen values") {
    const AvailabilityParams ap = paper_params(3);
    const PreferenceProfile profile({0.0, 0.5, 1.0}, ap.t0);
    const double expected[] = {8995.499249624761, 94.90490004910609,
                               -4119.064524549151};
    for (std::size_t n = 0; n < 3; ++n) {
      CHECK(availability_utility_direct(ap, profile, n) ==
            doctest::Approx(expected[n]).epsilon(1e-8));
    }
  }
}

TEST_CASE("telescoped form equals the integrals, printed form does not") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> players(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int trial = 0; trial < 40; ++trial) {
    AvailabilityParams ap = paper_params(players(rng));
    std::vector<double> prefs(ap.n_players);
    for (double& v : prefs) v = unit(rng);
    const PreferenceProfile profile(prefs, ap.t0);

    for (std::size_t n = 0; n < profile.size(); ++n) {
      const double direct = availability_utility_direct(ap, profile, n);
      const double telescoped = availability_utility_telescoped(ap, profile, n);
      CHECK(std::abs(direct - telescoped) <=
            1e-9 * std::max(1.0, std::abs(direct)));
      CHECK(std::abs(telescoping_identity_residual(ap, profile, n)) <=
            1e-12 * ap.n_players);
    }
  }

  // The printed closed form carries the exposure with the opposite sign, so
  // it deviates as soon as any exposure window is nonempty.
  const AvailabilityParams ap = paper_params(1);
  const PreferenceProfile late({1.0}, ap.t0);
  const double direct = availability_utility_direct(ap, late, 0);
  const double printed = availability_utility_closed(ap, late, 0);
  CHECK(std::abs(direct - printed) > 1.0);
}

TEST_CASE("rank convention changes the printed form only through the tie count") {
  const AvailabilityParams ap = paper_params(4);
  const PreferenceProfile tied({0.5, 0.5, 0.5, 0.5}, ap.t0);
  // All windows beyond the first are empty, so the integrals are unaffected.
  CHECK(rel_gap(availability_utility_direct(ap, tied, 0, TieRank::last),
                availability_utility_direct(ap, tied, 0, TieRank::first)) <= 1e-9);
  // The printed discounted sum has one term per rank, so the policies differ.
  CHECK(availability_utility_closed(ap, tied, 0, TieRank::last) !=
        availability_utility_closed(ap, tied, 0, TieRank::first));
}

TEST_CASE("symmetric curves") {
  const AvailabilityParams ap = paper_params(38);

  SUBCASE("printed curve endpoints") {
    const double log_d = std::log(0.999);
    const double expected0 =
        9.0 / (-log_d) - 1000.0 * (38.0 - 1.0) / (38.0 * log_d);
    CHECK(symmetric_utility(ap, 0.0) == doctest::Approx(expected0).epsilon(1e-12));
    const double d28 = std::pow(0.999, 28.0);
    const double expected1 =
        d28 * 10.0 / (-log_d) - 1000.0 * (38.0 - d28) / (38.0 * log_d);
    CHECK(symmetric_utility(ap, 1.0) == doctest::Approx(expected1).epsilon(1e-12));
  }

  SUBCASE("integral curve equals the direct evaluation of an all-equal profile") {
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
      const PreferenceProfile everyone(std::vector<double>(38, p), ap.t0);
      const double direct = availability_utility_direct(ap, everyone, 5);
      CHECK(rel_gap(symmetric_utility_integral(ap, p), direct) <= 1e-8);
    }
  }

  SUBCASE("cost-subtracted curve differs by twice the exposure term") {
    for (double p : {0.1, 0.5, 1.0}) {
      const double printed = symmetric_utility(ap, p);
      const double subtracted = symmetric_utility_cost_subtracted(ap, p);
      const double log_d = std::log(0.999);
      const double exposure =
          1000.0 * (38.0 - std::pow(0.999, p * 28.0)) / (38.0 * (-log_d));
      CHECK(printed - subtracted == doctest::Approx(2.0 * exposure).epsilon(1e-9));
    }
  }
}

TEST_CASE("closed-form symmetric equilibrium") {
  SUBCASE("38 players sit at an interior point") {
    const SymmetricEquilibrium eq = symmetric_equilibrium(paper_params(38));
    CHECK(eq.kind == SymmetricEquilibrium::Kind::interior);
    CHECK(eq.p_star.value() == doctest::Approx(0.3806361200648463).epsilon(1e-9));
    CHECK(std::abs(eq.p - 0.380) <= 0.005);
  }

  SUBCASE("36 players all vaccinate immediately") {
    const SymmetricEquilibrium eq = symmetric_equilibrium(paper_params(36));
    CHECK(eq.kind == SymmetricEquilibrium::Kind::everyone_alpha);
    CHECK(eq.p == 0.0);
    CHECK(eq.p_star.value() < 0.0);
  }

  SUBCASE("40 players all wait") {
    const SymmetricEquilibrium eq = symmetric_equilibrium(paper_params(40));
    CHECK(eq.kind == SymmetricEquilibrium::Kind::everyone_beta);
    CHECK(eq.p == 1.0);
    CHECK(eq.p_star.value() > 1.0);
  }

  SUBCASE("equal benefits are rejected, zero delay is degenerate") {
    AvailabilityParams even = paper_params(38);
    even.benefit_beta = even.benefit_alpha;
    CHECK_THROWS_AS(symmetric_equilibrium(even), std::invalid_argument);

    AvailabilityParams instant = paper_params(38);
    instant.t0 = 0.0;
    CHECK(symmetric_equilibrium(instant).kind ==
          SymmetricEquilibrium::Kind::degenerate);
  }

  SUBCASE("boundary selection is convention independent when exterior") {
    for (int n : {36, 40}) {
      AvailabilityParams base10 = paper_params(n);
      base10.discount.convention = LogConvention::base10;
      CHECK(symmetric_equilibrium(paper_params(n)).kind ==
            symmetric_equilibrium(base10).kind);
    }
  }
}

TEST_CASE("numeric argmax of the symmetric curves") {
  SUBCASE("benefit-only comparison at zero infection cost") {
    AvailabilityParams ap = paper_params(38);
    ap.infection_cost = 0.0;
    // Waiting pays: discounted late benefit beats the immediate one.
    CHECK(std::pow(0.999, 28.0) * 10.0 > 9.0);
    CHECK(symmetric_argmax_numeric(ap).x == doctest::Approx(1.0).epsilon(1e-6));

    ap.benefit_beta = 9.1;  // now the discount outweighs the gain
    CHECK(std::pow(0.999, 28.0) * 9.1 < 9.0);
    CHECK(symmetric_argmax_numeric(ap).x == doctest::Approx(0.0).epsilon(1e-6));
  }

  SUBCASE("paper parameters: the three layers land apart") {
    const AvailabilityParams ap = paper_params(38);
    CHECK(symmetric_argmax_numeric(ap).x > 0.999);
    CHECK(symmetric_argmax_integral(ap).x < 1e-3);
    CHECK(std::abs(symmetric_argmax_cost_subtracted(ap).x - 0.3806361200648463) <=
          1e-4);
  }

  SUBCASE("interior stationary point of the printed curve") {
    AvailabilityParams ap;
    ap.n_players = 10;
    ap.benefit_alpha = 9.0;
    ap.benefit_beta = 10.0;
    ap.infection_cost = 85.0;
    ap.t0 = 28.0;
    ap.discount = {0.96, LogConvention::natural};
    const numeric::Argmax best = symmetric_argmax_numeric(ap);
    CHECK(best.x == doctest::Approx(0.37487850934292144).epsilon(1e-6));

    const double h = 1e-5;
    const double slope =
        (symmetric_utility(ap, best.x + h) - symmetric_utility(ap, best.x - h)) /
        (2.0 * h);
    CHECK(std::abs(slope) <= 1e-3 * std::max(1.0, std::abs(best.value)));
  }

  SUBCASE("grid argmax is convention invariant") {
    AvailabilityParams natural = paper_params(38);
    AvailabilityParams base10 = paper_params(38);
    base10.discount.convention = LogConvention::base10;
    CHECK(symmetric_argmax_numeric(natural).x ==
          doctest::Approx(symmetric_argmax_numeric(base10).x).epsilon(1e-9));
    CHECK(symmetric_argmax_integral(natural).x ==
          doctest::Approx(symmetric_argmax_integral(base10).x).epsilon(1e-9));
  }
}

TEST_CASE("window comparison report") {
  const AvailabilityParams ap = paper_params(3);
  const PreferenceProfile profile({0.0, 0.5, 1.0}, ap.t0);

  const Lemma7Report report = verify_lemma7(ap, profile, 1e-9);
  CHECK(report.players.size() == 3);
  CHECK(report.telescoped_within_tolerance);
  CHECK_FALSE(report.closed_within_tolerance);
  CHECK(report.max_abs_gap_closed > 1.0);
  CHECK(report.telescoping_residual <= 1e-12 * 3);
  CHECK(report.players[1].rank == 2);

  SUBCASE("an infinite tolerance always passes but keeps the residuals") {
    const double inf = std::numeric_limits<double>::infinity();
    const Lemma7Report loose = verify_lemma7(ap, profile, inf);
    CHECK(loose.closed_within_tolerance);
    CHECK(loose.telescoped_within_tolerance);
    CHECK(loose.max_abs_gap_closed == doctest::Approx(report.max_abs_gap_closed));
  }

  SUBCASE("a single player at the origin has no gap at all") {
    const AvailabilityParams one = paper_params(1);
    const PreferenceProfile immediate({0.0}, one.t0);
    const Lemma7Report clean = verify_lemma7(one, immediate, 1e-9);
    CHECK(clean.closed_within_tolerance);
    CHECK(clean.telescoped_within_tolerance);
  }
}
