#include "epigame/serialize.hpp"

#include <stdexcept>

namespace epigame {

using nlohmann::json;

std::string to_string(Orientation o) {
  return o == Orientation::cost ? "cost" : "payoff";
}

std::string to_string(HealthStatus s) {
  return s == HealthStatus::susceptible ? "susceptible" : "infected";
}

std::string to_string(MaskRegime r) {
  switch (r) {
    case MaskRegime::both_use: return "both_use";
    case MaskRegime::exactly_one_uses: return "exactly_one_uses";
    default: return "nobody_uses";
  }
}

std::string to_string(MaskAction a) { return a == MaskAction::no ? "no" : "use"; }

std::string to_string(VaccineChoice c) {
  switch (c) {
    case VaccineChoice::alpha: return "alpha";
    case VaccineChoice::beta: return "beta";
    default: return "tie";
  }
}

std::string to_string(LogConvention c) {
  return c == LogConvention::natural ? "natural" : "base10";
}

std::string to_string(SymmetricEquilibrium::Kind k) {
  switch (k) {
    case SymmetricEquilibrium::Kind::interior: return "interior";
    case SymmetricEquilibrium::Kind::everyone_alpha: return "everyone_alpha";
    case SymmetricEquilibrium::Kind::everyone_beta: return "everyone_beta";
    default: return "degenerate";
  }
}

json game_to_json(const FiniteGame& game) {
  json values = json::array();
  for (const ValuePair& v : game.values()) {
    values.push_back(json::array({v.row, v.col}));
  }
  return json{{"orientation", to_string(game.orientation())},
              {"row_actions", game.row_actions()},
              {"col_actions", game.col_actions()},
              {"values", values}};
}

FiniteGame game_from_json(const json& j) {
  const std::string orientation = j.at("orientation").get<std::string>();
  if (orientation != "cost" && orientation != "payoff") {
    throw std::invalid_argument("orientation must be \"cost\" or \"payoff\"");
  }
  std::vector<ValuePair> values;
  for (const json& cell : j.at("values")) {
    if (!cell.is_array() || cell.size() != 2) {
      throw std::invalid_argument("each value entry must be a [row, col] pair");
    }
    values.push_back({cell[0].get<double>(), cell[1].get<double>()});
  }
  return FiniteGame(orientation == "cost" ? Orientation::cost : Orientation::payoff,
                    j.at("row_actions").get<std::vector<std::string>>(),
                    j.at("col_actions").get<std::vector<std::string>>(),
                    std::move(values));
}

namespace {

json profile_to_json(const ActionProfile& p) {
  return json{{"row", p.row_action}, {"col", p.col_action}};
}

}  // namespace

json report_to_json(const EquilibriumReport& report) {
  json nash = json::array();
  for (const NashEquilibrium& ne : report.pure_nash) {
    json j = profile_to_json(ne.profile);
    j["strict"] = ne.strict;
    nash.push_back(j);
  }
  json optima = json::array();
  for (const ActionProfile& p : report.social_optima) optima.push_back(profile_to_json(p));

  json poa;
  if (report.price_of_anarchy) {
    poa = *report.price_of_anarchy;
  } else {
    poa = "undefined";
  }
  return json{{"pure_nash", nash},
              {"social_optima", optima},
              {"dominant_actions",
               {{"row", report.dominance.row_dominant}, {"col", report.dominance.col_dominant}}},
              {"dominated_actions",
               {{"row", report.dominance.row_dominated}, {"col", report.dominance.col_dominated}}},
              {"price_of_anarchy", poa}};
}

json regime_to_json(const EfficiencyRegime& regime) {
  json j{{"ratio", regime.ratio},
         {"interval", json::array({regime.lower, regime.upper})},
         {"boundary", regime.boundary}};
  j["regime"] = regime.regime ? json(to_string(*regime.regime)) : json("boundary");
  return j;
}

json threshold_to_json(const MultiplayerThreshold& threshold) {
  json j{{"exposure", threshold.exposure}, {"boundary", threshold.boundary}};
  j["required_cost_factor"] = threshold.required_cost_factor
                                  ? json(*threshold.required_cost_factor)
                                  : json("undefined");
  j["best_response"] =
      threshold.best_response ? json(to_string(*threshold.best_response)) : json("boundary");
  return j;
}

json regime_to_json(const DistancingRegime& regime) {
  json optima = json::array();
  for (const ActionProfile& p : regime.social_optima) optima.push_back(profile_to_json(p));
  return json{{"stay_stay_is_ne", regime.stay_stay_is_ne},
              {"go_go_is_ne", regime.go_go_is_ne},
              {"boundary", regime.boundary},
              {"expected_loss", regime.expected_loss},
              {"combined_stakes",
               json::array({regime.combined_stakes_row, regime.combined_stakes_col})},
              {"social_optima", optima}};
}

json equilibrium_to_json(const SymmetricEquilibrium& eq) {
  json j{{"kind", to_string(eq.kind)}, {"p", eq.p}, {"tie", eq.tie}};
  j["p_star"] = eq.p_star ? json(*eq.p_star) : json("undefined");
  return j;
}

json lemma7_to_json(const Lemma7Report& report) {
  json players = json::array();
  for (const Lemma7PlayerRecord& r : report.players) {
    players.push_back(json{{"player", r.player},
                           {"preference", r.preference},
                           {"rank", r.rank},
                           {"direct", r.direct},
                           {"closed", r.closed},
                           {"telescoped", r.telescoped},
                           {"gap_closed", r.gap_closed},
                           {"gap_telescoped", r.gap_telescoped}});
  }
  return json{{"players", players},
              {"max_abs_gap_closed", report.max_abs_gap_closed},
              {"max_abs_gap_telescoped", report.max_abs_gap_telescoped},
              {"telescoping_residual", report.telescoping_residual},
              {"tolerance", report.tolerance},
              {"tie_rank", report.policy == TieRank::last ? "last" : "first"},
              {"closed_within_tolerance", report.closed_within_tolerance},
              {"telescoped_within_tolerance", report.telescoped_within_tolerance}};
}

}  // namespace epigame
