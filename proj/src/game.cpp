#include "epigame/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace epigame {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void check_unique(const std::vector<std::string>& labels, const char* who) {
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw std::invalid_argument(std::string(who) + " action labels must be unique");
  }
}

// a is strictly better than b for the given orientation, beyond the tie
// tolerance.
bool strictly_better(Orientation o, double a, double b, double tol) {
  return o == Orientation::cost ? (b - a > tol) : (a - b > tol);
}

}  // namespace

FiniteGame::FiniteGame(Orientation orientation, std::vector<std::string> row_actions,
                       std::vector<std::string> col_actions, std::vector<ValuePair> values)
    : orientation_(orientation),
      row_actions_(std::move(row_actions)),
      col_actions_(std::move(col_actions)),
      values_(std::move(values)) {
  require(!row_actions_.empty() && !col_actions_.empty(),
          "a game needs at least one action per player");
  require(values_.size() == row_actions_.size() * col_actions_.size(),
          "value table does not match the action space");
  check_unique(row_actions_, "row");
  check_unique(col_actions_, "column");
  for (const ValuePair& v : values_) {
    require(std::isfinite(v.row) && std::isfinite(v.col), "game values must be finite");
  }
}

std::size_t FiniteGame::action_index(Player p, const std::string& label) const {
  const auto& labels = actions(p);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw std::invalid_argument("unknown action label: " + label);
  }
  return static_cast<std::size_t>(it - labels.begin());
}

double total_value(const FiniteGame& game, std::size_t row, std::size_t col) {
  const ValuePair& v = game.value(row, col);
  return v.row + v.col;
}

std::vector<NashEquilibrium> pure_nash_equilibria(const FiniteGame& game, double tie_tol) {
  std::vector<NashEquilibrium> out;
  const Orientation o = game.orientation();
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      bool is_ne = true;
      bool strict = true;
      for (std::size_t r2 = 0; r2 < game.rows() && is_ne; ++r2) {
        if (r2 == r) continue;
        if (strictly_better(o, game.value(r2, c).row, game.value(r, c).row, tie_tol))
          is_ne = false;
        if (!strictly_better(o, game.value(r, c).row, game.value(r2, c).row, tie_tol))
          strict = false;
      }
      for (std::size_t c2 = 0; c2 < game.cols() && is_ne; ++c2) {
        if (c2 == c) continue;
        if (strictly_better(o, game.value(r, c2).col, game.value(r, c).col, tie_tol))
          is_ne = false;
        if (!strictly_better(o, game.value(r, c).col, game.value(r, c2).col, tie_tol))
          strict = false;
      }
      if (is_ne) {
        out.push_back({{game.row_actions()[r], game.col_actions()[c]}, strict});
      }
    }
  }
  return out;
}

std::vector<ActionProfile> social_optima(const FiniteGame& game, double tie_tol) {
  const Orientation o = game.orientation();
  double best = game.orientation() == Orientation::cost
                    ? std::numeric_limits<double>::infinity()
                    : -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      const double t = total_value(game, r, c);
      if (strictly_better(o, t, best, 0.0)) best = t;
    }
  }
  std::vector<ActionProfile> out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      const double t = total_value(game, r, c);
      if (!strictly_better(o, best, t, tie_tol)) {
        out.push_back({game.row_actions()[r], game.col_actions()[c]});
      }
    }
  }
  return out;
}

std::vector<std::string> best_response(const FiniteGame& game, Player player,
                                       const std::string& opponent_action, double tie_tol) {
  const Player opponent = player == Player::row ? Player::col : Player::row;
  const std::size_t fixed = game.action_index(opponent, opponent_action);
  const std::size_t n = game.actions(player).size();
  const Orientation o = game.orientation();

  auto value_at = [&](std::size_t own) {
    return player == Player::row ? game.value_for(player, own, fixed)
                                 : game.value_for(player, fixed, own);
  };

  double best = value_at(0);
  for (std::size_t i = 1; i < n; ++i) {
    if (strictly_better(o, value_at(i), best, 0.0)) best = value_at(i);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!strictly_better(o, best, value_at(i), tie_tol)) {
      out.push_back(game.actions(player)[i]);
    }
  }
  return out;
}

DominanceReport dominance(const FiniteGame& game, double tie_tol) {
  DominanceReport report;
  const Orientation o = game.orientation();

  auto value_at = [&](Player p, std::size_t own, std::size_t other) {
    return p == Player::row ? game.value_for(p, own, other) : game.value_for(p, other, own);
  };

  for (Player p : {Player::row, Player::col}) {
    const std::size_t n_own = game.actions(p).size();
    const std::size_t n_other =
        game.actions(p == Player::row ? Player::col : Player::row).size();
    auto& dominant = p == Player::row ? report.row_dominant : report.col_dominant;
    auto& dominated = p == Player::row ? report.row_dominated : report.col_dominated;

    for (std::size_t a = 0; a < n_own; ++a) {
      // Weakly dominant: at least as good as every alternative against every
      // opponent action, strictly better somewhere.
      bool weakly = n_own > 1;
      bool somewhere_strict = false;
      for (std::size_t alt = 0; alt < n_own && weakly; ++alt) {
        if (alt == a) continue;
        for (std::size_t other = 0; other < n_other; ++other) {
          if (strictly_better(o, value_at(p, alt, other), value_at(p, a, other), tie_tol)) {
            weakly = false;
            break;
          }
          if (strictly_better(o, value_at(p, a, other), value_at(p, alt, other), tie_tol)) {
            somewhere_strict = true;
          }
        }
      }
      if (weakly && somewhere_strict) dominant.push_back(game.actions(p)[a]);

      // Strictly dominated: some alternative is strictly better against
      // every opponent action.
      bool is_dominated = false;
      for (std::size_t alt = 0; alt < n_own && !is_dominated; ++alt) {
        if (alt == a) continue;
        bool all_strict = true;
        for (std::size_t other = 0; other < n_other; ++other) {
          if (!strictly_better(o, value_at(p, alt, other), value_at(p, a, other), tie_tol)) {
            all_strict = false;
            break;
          }
        }
        is_dominated = all_strict;
      }
      if (is_dominated) dominated.push_back(game.actions(p)[a]);
    }
  }
  return report;
}

std::optional<double> price_of_anarchy(const FiniteGame& game, double tie_tol) {
  const auto equilibria = pure_nash_equilibria(game, tie_tol);
  if (equilibria.empty()) return std::nullopt;

  const Orientation o = game.orientation();
  double worst_ne = 0.0;
  bool first = true;
  for (const NashEquilibrium& ne : equilibria) {
    const std::size_t r = game.action_index(Player::row, ne.profile.row_action);
    const std::size_t c = game.action_index(Player::col, ne.profile.col_action);
    const double t = total_value(game, r, c);
    // Worst equilibrium: highest total cost, or lowest total payoff.
    if (first || strictly_better(o, worst_ne, t, 0.0)) worst_ne = t;
    first = false;
  }

  const auto optima = social_optima(game, tie_tol);
  const std::size_t r = game.action_index(Player::row, optima.front().row_action);
  const std::size_t c = game.action_index(Player::col, optima.front().col_action);
  const double best = total_value(game, r, c);

  const double denominator = o == Orientation::cost ? best : worst_ne;
  if (denominator == 0.0) return std::nullopt;
  return o == Orientation::cost ? worst_ne / best : best / worst_ne;
}

EquilibriumReport analyze(const FiniteGame& game, double tie_tol) {
  EquilibriumReport report;
  report.pure_nash = pure_nash_equilibria(game, tie_tol);
  report.social_optima = social_optima(game, tie_tol);
  report.dominance = dominance(game, tie_tol);
  report.price_of_anarchy = price_of_anarchy(game, tie_tol);
  return report;
}

}  // namespace epigame
