#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace epigame {

/// Whether lower values (cost) or higher values (payoff) are preferred.
enum class Orientation { cost, payoff };

enum class Player { row, col };

/// One cell of a bimatrix game: the row player's value and the column
/// player's value.
struct ValuePair {
  double row = 0.0;
  double col = 0.0;

  friend bool operator==(const ValuePair&, const ValuePair&) = default;
};

/// A finite two-player game in matrix form. Values are stored row-major;
/// entries must be finite and action labels unique per player.
class FiniteGame {
 public:
  FiniteGame(Orientation orientation, std::vector<std::string> row_actions,
             std::vector<std::string> col_actions, std::vector<ValuePair> values);

  Orientation orientation() const { return orientation_; }
  const std::vector<std::string>& row_actions() const { return row_actions_; }
  const std::vector<std::string>& col_actions() const { return col_actions_; }
  const std::vector<ValuePair>& values() const { return values_; }

  std::size_t rows() const { return row_actions_.size(); }
  std::size_t cols() const { return col_actions_.size(); }

  const ValuePair& value(std::size_t row, std::size_t col) const {
    return values_[row * col_actions_.size() + col];
  }

  /// Value of the given player at a profile.
  double value_for(Player p, std::size_t row, std::size_t col) const {
    const ValuePair& v = value(row, col);
    return p == Player::row ? v.row : v.col;
  }

  const std::vector<std::string>& actions(Player p) const {
    return p == Player::row ? row_actions_ : col_actions_;
  }

  /// Index of an action label; throws std::invalid_argument for unknown labels.
  std::size_t action_index(Player p, const std::string& label) const;

 private:
  Orientation orientation_;
  std::vector<std::string> row_actions_;
  std::vector<std::string> col_actions_;
  std::vector<ValuePair> values_;
};

/// A pure strategy profile, identified by action labels.
struct ActionProfile {
  std::string row_action;
  std::string col_action;

  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
  friend auto operator<=>(const ActionProfile&, const ActionProfile&) = default;
};

/// A pure Nash equilibrium. `strict` is true when every unilateral deviation
/// makes the deviating player strictly worse off.
struct NashEquilibrium {
  ActionProfile profile;
  bool strict = false;

  friend bool operator==(const NashEquilibrium&, const NashEquilibrium&) = default;
};

/// Weakly dominant and strictly dominated actions, per player.
struct DominanceReport {
  std::vector<std::string> row_dominant;
  std::vector<std::string> col_dominant;
  std::vector<std::string> row_dominated;
  std::vector<std::string> col_dominated;

  const std::vector<std::string>& dominant(Player p) const {
    return p == Player::row ? row_dominant : col_dominant;
  }
  const std::vector<std::string>& dominated(Player p) const {
    return p == Player::row ? row_dominated : col_dominated;
  }
};

struct EquilibriumReport {
  std::vector<NashEquilibrium> pure_nash;
  std::vector<ActionProfile> social_optima;
  DominanceReport dominance;
  std::optional<double> price_of_anarchy;  // nullopt means undefined
};

// All solvers take an explicit tie tolerance: two values within `tie_tol` of
// each other compare as equal. The default 0 keeps comparisons exact.

/// Profiles from which no player can strictly improve by a unilateral
/// deviation. Weak equilibria are included and flagged non-strict.
std::vector<NashEquilibrium> pure_nash_equilibria(const FiniteGame& game,
                                                  double tie_tol = 0.0);

/// Profiles extremizing the sum of both players' values (minimum total cost
/// or maximum total payoff). Ties are all returned.
std::vector<ActionProfile> social_optima(const FiniteGame& game, double tie_tol = 0.0);

DominanceReport dominance(const FiniteGame& game, double tie_tol = 0.0);

/// The player's best responses to a fixed opponent action, ties included.
std::vector<std::string> best_response(const FiniteGame& game, Player player,
                                       const std::string& opponent_action,
                                       double tie_tol = 0.0);

/// Worst pure-equilibrium welfare relative to the social optimum.
/// Undefined (nullopt) when no pure equilibrium exists or the denominator
/// is zero.
std::optional<double> price_of_anarchy(const FiniteGame& game, double tie_tol = 0.0);

/// Runs all solvers on one game.
EquilibriumReport analyze(const FiniteGame& game, double tie_tol = 0.0);

/// Total value (both players summed) at a profile given by indices.
double total_value(const FiniteGame& game, std::size_t row, std::size_t col);

}  // namespace epigame
