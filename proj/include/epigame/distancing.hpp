#pragma once

#include <optional>
#include <vector>

#include "epigame/game.hpp"

namespace epigame {

/// Parameters of the go/stay decision. Benefits and costs may differ per
/// player; the symmetric constructor fills both sides alike.
struct DistancingScenario {
  double benefit_row = 0.0;   // benefit of going out, row player
  double benefit_col = 0.0;
  double cost_row = 0.0;      // cost of staying home, row player
  double cost_col = 0.0;
  double mortality = 0.0;     // in [0, 1]
  double life_value = 0.0;    // money
  double rho = 0.0;           // infection probability in [0, 1]
  std::optional<double> gathering_cap;  // government cap on the scale of a meeting

  static DistancingScenario symmetric(double benefit, double cost, double mortality,
                                      double life_value, double rho);

  /// rho * mortality * life_value, the expected loss of one outing.
  double expected_infection_loss() const { return rho * mortality * life_value; }

  void validate() const;  // throws std::invalid_argument on domain violations
};

/// Polynomial with ascending coefficients, the supported family of
/// time-dependent benefit and cost curves.
struct Polynomial {
  std::vector<double> coefficients;

  double operator()(double t) const;
  static Polynomial monomial(int degree, double scale = 1.0);
};

struct TimeProfile {
  Polynomial benefit;
  Polynomial cost;
};

enum class Outing { go, stay };

/// 2x2 payoff-orientation game over {go, stay}.
FiniteGame build_distancing_game(const DistancingScenario& scenario);

/// Equilibrium structure of the go/stay game. (stay, stay) is always an
/// equilibrium; (go, go) joins it when the expected infection loss stays
/// below the combined stakes benefit + cost (per player when asymmetric).
struct DistancingRegime {
  bool stay_stay_is_ne = true;
  bool go_go_is_ne = false;
  bool boundary = false;  // loss equals the combined stakes for some player
  double expected_loss = 0.0;
  double combined_stakes_row = 0.0;  // benefit + cost, row player
  double combined_stakes_col = 0.0;
  std::vector<ActionProfile> social_optima;
};

DistancingRegime classify_distancing(const DistancingScenario& scenario);

/// Probability of catching the infection over an exposure of scale t.
double infection_factor(double rho, double t);

/// Payoff of the time-extended game at scale t: going out earns benefit(t)
/// only if the other side shows up, always risks the infection loss, and
/// staying home costs cost(t) regardless.
double extended_utility(const DistancingScenario& scenario, const TimeProfile& profile,
                        double t, Outing own, Outing other);

struct CrossoverResult {
  std::optional<double> time;  // unset when the bracket ends share a sign
  double residual = 0.0;       // infection loss minus combined stakes at the root
  bool non_monotone = false;   // difference not monotone on the 64-point scan
};

/// Scale t* at which the expected infection loss equals benefit(t) + cost(t),
/// located by bisection inside [t_lo, t_hi].
CrossoverResult crossover_time(const DistancingScenario& scenario,
                               const TimeProfile& profile, double t_lo, double t_hi);

/// Effective meeting scale under a government cap: min(cap, t_star).
double apply_gathering_cap(double t_star, double cap);

}  // namespace epigame
