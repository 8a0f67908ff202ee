#include "epigame/mask.hpp"

#include <cmath>
#include <stdexcept>

namespace epigame {

namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

const std::vector<std::string> kThreeActions = {"no", "out", "in"};
const std::vector<std::string> kTwoActions = {"no", "use"};

}  // namespace

std::vector<std::string> MaskParams::validate() const {
  check_unit_interval(rho, "rho");
  check_unit_interval(a, "a");
  check_unit_interval(b, "b");
  if (n_players < 1) throw std::invalid_argument("n_players must be positive");
  if (g_contacts < 1) throw std::invalid_argument("g_contacts must be positive");
  if (k_infected < 0 || k_infected > n_players) {
    throw std::invalid_argument("k_infected must lie in [0, n_players]");
  }

  std::vector<std::string> warnings;
  if (!(c_out > 0.0)) warnings.push_back("expected c_out > 0");
  if (!(c_out < c_in)) warnings.push_back("expected c_out < c_in");
  if (!(c_in < c_i)) warnings.push_back("expected c_in < c_i");
  return warnings;
}

FiniteGame build_basic_mask_game(const MaskParams& params, HealthStatus first,
                                 HealthStatus second) {
  params.validate();

  auto mask_price = [&](std::size_t action) {
    switch (action) {
      case 0: return 0.0;           // no
      case 1: return params.c_out;  // out
      default: return params.c_in;  // in
    }
  };

  std::vector<ValuePair> cells(9);

  if (first == second) {
    // Identical statuses: each player pays only for their own mask, plus the
    // infection cost as a constant when both are already infected.
    const double shift = first == HealthStatus::infected ? params.c_i : 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        cells[r * 3 + c] = {mask_price(r) + shift, mask_price(c) + shift};
      }
    }
    return {Orientation::cost, kThreeActions, kThreeActions, std::move(cells)};
  }

  // Mixed statuses: the susceptible player takes the row side. They escape
  // infection only behind their own filtering mask (in) or the infected
  // player's source control (out).
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const bool infected = !(r == 2 || c == 1);
      cells[r * 3 + c] = {mask_price(r) + (infected ? params.c_i : 0.0),
                          mask_price(c) + params.c_i};
    }
  }
  return {Orientation::cost, kThreeActions, kThreeActions, std::move(cells)};
}

FiniteGame build_bayesian_mask_game(const MaskParams& params, bool include_baseline_risk) {
  params.validate();
  const double risk = params.rho * (1.0 - params.rho) * params.c_i;
  const double base = include_baseline_risk ? params.rho * params.c_i : 0.0;
  const double u = params.c_use;
  std::vector<ValuePair> cells = {
      {risk + base, risk + base},  // (no, no)
      {base, u + base},            // (no, use)
      {u + base, base},            // (use, no)
      {u + base, u + base},        // (use, use)
  };
  return {Orientation::cost, kTwoActions, kTwoActions, std::move(cells)};
}

FiniteGame build_efficiency_mask_game(const MaskParams& params) {
  params.validate();
  const double risk = params.rho * (1.0 - params.rho) * params.c_i;
  const double a = params.a, b = params.b, u = params.c_use;
  const double both = u + (1.0 - a) * (1.0 - b) * risk;
  std::vector<ValuePair> cells = {
      {risk, risk},                                  // (no, no)
      {(1.0 - b) * risk, (1.0 - a) * risk + u},      // (no, use)
      {(1.0 - a) * risk + u, (1.0 - b) * risk},      // (use, no)
      {both, both},                                  // (use, use)
  };
  return {Orientation::cost, kTwoActions, kTwoActions, std::move(cells)};
}

EfficiencyRegime classify_efficiency_regime(const MaskParams& params) {
  params.validate();
  if (!(params.c_i > 0.0)) throw std::invalid_argument("c_i must be positive");

  EfficiencyRegime out;
  out.ratio = params.c_use / params.c_i;
  const double p = params.rho * (1.0 - params.rho);
  out.lower = params.a * (1.0 - params.b) * p;
  out.upper = params.a * p;

  if (out.ratio == out.lower || out.ratio == out.upper) {
    out.boundary = true;
    return out;
  }
  if (out.ratio < out.lower) {
    out.regime = MaskRegime::both_use;
  } else if (out.ratio < out.upper) {
    out.regime = MaskRegime::exactly_one_uses;
  } else {
    out.regime = MaskRegime::nobody_uses;
  }
  return out;
}

double multiplayer_mask_cost(const MaskParams& params, MaskAction action,
                             HealthStatus status) {
  params.validate();
  if (status == HealthStatus::infected) {
    return action == MaskAction::no ? params.c_i : params.c_i + params.c_use;
  }
  if (action == MaskAction::use) return params.c_use;
  const double share = static_cast<double>(params.k_infected) / params.n_players;
  const double exposure = 1.0 - std::pow(1.0 - share, params.g_contacts);
  return exposure * params.c_i;
}

MultiplayerThreshold multiplayer_mask_threshold(const MaskParams& params) {
  params.validate();
  if (!(params.c_i > 0.0)) throw std::invalid_argument("c_i must be positive");

  MultiplayerThreshold out;
  const double share = static_cast<double>(params.k_infected) / params.n_players;
  out.exposure = 1.0 - std::pow(1.0 - share, params.g_contacts);
  if (out.exposure > 0.0) out.required_cost_factor = 1.0 / out.exposure;

  const double ratio = params.c_use / params.c_i;
  if (out.exposure == ratio) {
    out.boundary = true;
  } else {
    out.best_response = out.exposure < ratio ? MaskAction::no : MaskAction::use;
  }
  return out;
}

}  // namespace epigame
