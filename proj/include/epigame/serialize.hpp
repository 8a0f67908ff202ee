#pragma once

#include <string>

#include "json.hpp"

#include "epigame/distancing.hpp"
#include "epigame/game.hpp"
#include "epigame/mask.hpp"
#include "epigame/vaccination.hpp"

namespace epigame {

// JSON wire format for games:
//   {"orientation": "cost", "row_actions": [...], "col_actions": [...],
//    "values": [[r, c], ...]}  (row-major)
nlohmann::json game_to_json(const FiniteGame& game);
FiniteGame game_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const EquilibriumReport& report);

nlohmann::json regime_to_json(const EfficiencyRegime& regime);
nlohmann::json threshold_to_json(const MultiplayerThreshold& threshold);
nlohmann::json regime_to_json(const DistancingRegime& regime);
nlohmann::json equilibrium_to_json(const SymmetricEquilibrium& eq);
nlohmann::json lemma7_to_json(const Lemma7Report& report);

std::string to_string(Orientation o);
std::string to_string(HealthStatus s);
std::string to_string(MaskRegime r);
std::string to_string(MaskAction a);
std::string to_string(VaccineChoice c);
std::string to_string(LogConvention c);
std::string to_string(SymmetricEquilibrium::Kind k);

}  // namespace epigame
