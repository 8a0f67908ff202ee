#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epigame/game.hpp"

namespace epigame {

enum class HealthStatus { susceptible, infected };

enum class MaskAction { no, use };

/// Parameters shared by the mask games. Costs are money, probabilities and
/// efficiencies live in [0, 1].
struct MaskParams {
  double c_out = 1.0;     // cost of a source-control mask
  double c_in = 10.0;     // cost of a self-protecting mask
  double c_use = 1.0;     // cost of the single mask type in the two-action games
  double c_i = 1000.0;    // cost of being infected
  double rho = 0.0;       // infection probability
  double a = 0.0;         // protection efficiency of wearing a mask
  double b = 0.0;         // spread-prevention efficiency of wearing a mask
  int n_players = 2;      // meeting size in the multiplayer game
  int k_infected = 0;     // number of infected participants
  int g_contacts = 1;     // contacts drawn per participant

  /// Throws std::invalid_argument on domain violations (probabilities outside
  /// [0,1], k outside [0,N], nonpositive N or g). Returns warnings for soft
  /// violations of the expected cost ordering 0 < c_out < c_in < c_i, which
  /// leave every computation well defined.
  std::vector<std::string> validate() const;
};

/// Three-action cost game over {no, out, in} for two players of known health
/// status. In mixed-status games the susceptible player takes the row side.
FiniteGame build_basic_mask_game(const MaskParams& params, HealthStatus first,
                                 HealthStatus second);

/// Two-action cost game over {no, use} under status uncertainty with
/// infection probability rho. The risk term rho*c_i common to every cell is
/// omitted by default; `include_baseline_risk` adds it back for absolute cost
/// reporting (it shifts every entry equally and changes no equilibrium).
FiniteGame build_bayesian_mask_game(const MaskParams& params,
                                    bool include_baseline_risk = false);

/// Two-action cost game over {no, use} where a mask protects its wearer with
/// efficiency a and holds back further spread with efficiency b.
FiniteGame build_efficiency_mask_game(const MaskParams& params);

enum class MaskRegime { both_use, exactly_one_uses, nobody_uses };

/// Position of the cost ratio c_use/c_i relative to the equilibrium interval
/// [a*(1-b)*rho*(1-rho), a*rho*(1-rho)].
struct EfficiencyRegime {
  std::optional<MaskRegime> regime;  // unset exactly on a boundary
  bool boundary = false;
  double ratio = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Classifies the efficiency game by the threshold interval. Equalities are
/// flagged as boundary rather than classified. Requires c_i > 0.
EfficiencyRegime classify_efficiency_regime(const MaskParams& params);

/// Expected cost of one participant of a meeting of n_players where
/// k_infected are infectious and everyone contacts g_contacts random others.
double multiplayer_mask_cost(const MaskParams& params, MaskAction action,
                             HealthStatus status);

/// Exposure threshold for the multiplayer game.
struct MultiplayerThreshold {
  double exposure = 0.0;                        // 1 - (1 - k/N)^g
  std::optional<double> required_cost_factor;   // 1/exposure, unset when exposure = 0
  std::optional<MaskAction> best_response;      // susceptible player; unset on boundary
  bool boundary = false;                        // exposure equals c_use/c_i exactly
};

MultiplayerThreshold multiplayer_mask_threshold(const MaskParams& params);

}  // namespace epigame
