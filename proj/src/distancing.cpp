#include "epigame/distancing.hpp"

#include <cmath>
#include <stdexcept>

#include "epigame/numeric.hpp"

namespace epigame {

namespace {
const std::vector<std::string> kGoStay = {"go", "stay"};
}

DistancingScenario DistancingScenario::symmetric(double benefit, double cost,
                                                 double mortality, double life_value,
                                                 double rho) {
  DistancingScenario s;
  s.benefit_row = s.benefit_col = benefit;
  s.cost_row = s.cost_col = cost;
  s.mortality = mortality;
  s.life_value = life_value;
  s.rho = rho;
  return s;
}

void DistancingScenario::validate() const {
  if (!(mortality >= 0.0 && mortality <= 1.0))
    throw std::invalid_argument("mortality must lie in [0, 1]");
  if (!(rho >= 0.0 && rho <= 1.0))
    throw std::invalid_argument("rho must lie in [0, 1]");
  if (life_value < 0.0) throw std::invalid_argument("life_value must be nonnegative");
  if (benefit_row < 0.0 || benefit_col < 0.0)
    throw std::invalid_argument("benefits must be nonnegative");
  if (cost_row < 0.0 || cost_col < 0.0)
    throw std::invalid_argument("costs must be nonnegative");
  if (gathering_cap && !(*gathering_cap > 0.0))
    throw std::invalid_argument("gathering_cap must be positive");
}

double Polynomial::operator()(double t) const {
  return numeric::polyval(coefficients, t);
}

Polynomial Polynomial::monomial(int degree, double scale) {
  Polynomial p;
  p.coefficients.assign(degree + 1, 0.0);
  p.coefficients[degree] = scale;
  return p;
}

FiniteGame build_distancing_game(const DistancingScenario& s) {
  s.validate();
  const double loss = s.expected_infection_loss();
  std::vector<ValuePair> cells = {
      {s.benefit_row - loss, s.benefit_col - loss},  // (go, go)
      {-loss - s.cost_row, -s.cost_col},             // (go, stay)
      {-s.cost_row, -loss - s.cost_col},             // (stay, go)
      {-s.cost_row, -s.cost_col},                    // (stay, stay)
  };
  return {Orientation::payoff, kGoStay, kGoStay, std::move(cells)};
}

DistancingRegime classify_distancing(const DistancingScenario& s) {
  s.validate();
  DistancingRegime regime;
  regime.expected_loss = s.expected_infection_loss();
  regime.combined_stakes_row = s.benefit_row + s.cost_row;
  regime.combined_stakes_col = s.benefit_col + s.cost_col;

  regime.go_go_is_ne = regime.expected_loss < regime.combined_stakes_row &&
                       regime.expected_loss < regime.combined_stakes_col;
  regime.boundary = regime.expected_loss == regime.combined_stakes_row ||
                    regime.expected_loss == regime.combined_stakes_col;

  // Total payoff comparison between the two symmetric profiles; the mixed
  // profiles never exceed both.
  const double total_go = regime.combined_stakes_row + regime.combined_stakes_col -
                          2.0 * regime.expected_loss;
  if (total_go > 0.0) {
    regime.social_optima.push_back({"go", "go"});
  } else if (total_go < 0.0) {
    regime.social_optima.push_back({"stay", "stay"});
  } else {
    regime.social_optima.push_back({"go", "go"});
    regime.social_optima.push_back({"stay", "stay"});
  }
  return regime;
}

double infection_factor(double rho, double t) {
  return 1.0 - std::pow(1.0 - rho, t);
}

double extended_utility(const DistancingScenario& s, const TimeProfile& profile,
                        double t, Outing own, Outing other) {
  s.validate();
  if (t < 0.0) throw std::invalid_argument("t must be nonnegative");
  if (own == Outing::stay) return -profile.cost(t);
  const double loss = infection_factor(s.rho, t) * s.mortality * s.life_value;
  if (other == Outing::go) return profile.benefit(t) - loss;
  return -loss - profile.cost(t);
}

CrossoverResult crossover_time(const DistancingScenario& s, const TimeProfile& profile,
                               double t_lo, double t_hi) {
  s.validate();
  if (!(t_lo < t_hi) || t_lo < 0.0) throw std::invalid_argument("invalid bracket");

  const double scale = s.mortality * s.life_value;
  auto difference = [&](double t) {
    return infection_factor(s.rho, t) * scale - (profile.benefit(t) + profile.cost(t));
  };

  const numeric::BisectionResult b = numeric::bisect(difference, t_lo, t_hi, 64);
  CrossoverResult out;
  out.non_monotone = !b.monotone_scan;
  if (b.root) {
    out.time = b.root;
    out.residual = b.residual;
  }
  return out;
}

double apply_gathering_cap(double t_star, double cap) {
  if (!(t_star > 0.0) || !(cap > 0.0))
    throw std::invalid_argument("cap and t_star must be positive");
  return std::min(t_star, cap);
}

}  // namespace epigame
