#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "epigame/game.hpp"
#include "epigame/serialize.hpp"

using namespace epigame;

namespace {

FiniteGame make(Orientation o, std::vector<std::string> rows,
                std::vector<std::string> cols, std::vector<ValuePair> values) {
  return FiniteGame(o, std::move(rows), std::move(cols), std::move(values));
}

std::set<std::pair<std::string, std::string>> nash_set(const FiniteGame& g,
                                                       double tol = 0.0) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& ne : pure_nash_equilibria(g, tol)) {
    out.insert({ne.profile.row_action, ne.profile.col_action});
  }
  return out;
}

std::set<std::pair<std::string, std::string>> so_set(const FiniteGame& g,
                                                     double tol = 0.0) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& p : social_optima(g, tol)) {
    out.insert({p.row_action, p.col_action});
  }
  return out;
}

// Deterministic random games, small value set so ties happen often.
FiniteGame random_game(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> orient(0, 1);
  const int rows = dim(rng), cols = dim(rng);
  std::vector<std::string> row_labels, col_labels;
  for (int r = 0; r < rows; ++r) row_labels.push_back("r" + std::to_string(r));
  for (int c = 0; c < cols; ++c) col_labels.push_back("c" + std::to_string(c));
  std::vector<ValuePair> values;
  for (int i = 0; i < rows * cols; ++i) {
    values.push_back({static_cast<double>(value(rng)), static_cast<double>(value(rng))});
  }
  return make(orient(rng) ? Orientation::payoff : Orientation::cost,
              std::move(row_labels), std::move(col_labels), std::move(values));
}

}  // namespace

TEST_CASE("game construction rejects malformed input") {
  CHECK_THROWS_AS(make(Orientation::cost, {"a"}, {"x", "y"}, {{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make(Orientation::cost, {"a", "a"}, {"x"}, {{0, 0}, {0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make(Orientation::cost, {"a"}, {"x"},
                       {{std::numeric_limits<double>::quiet_NaN(), 0}}),
                  std::invalid_argument);
  const FiniteGame g = make(Orientation::cost, {"a"}, {"x"}, {{1, 2}});
  CHECK_THROWS_AS(g.action_index(Player::row, "b"), std::invalid_argument);
}

TEST_CASE("equilibria of tiny cost games") {
  SUBCASE("all cells equal: every profile is a weak equilibrium") {
    const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x", "y"},
                              {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(nash_set(g).size() == 4);
    for (const auto& ne : pure_nash_equilibria(g)) CHECK_FALSE(ne.strict);
    CHECK(so_set(g).size() == 4);
  }

  SUBCASE("cost matching pennies has no pure equilibrium") {
    const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x", "y"},
                              {{0, 1}, {1, 0}, {1, 0}, {0, 1}});
    CHECK(nash_set(g).empty());
    CHECK_FALSE(price_of_anarchy(g).has_value());
  }

  SUBCASE("dominant diagonal is a strict equilibrium") {
    const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x", "y"},
                              {{0, 0}, {0, 2}, {2, 0}, {2, 2}});
    const auto equilibria = pure_nash_equilibria(g);
    REQUIRE(equilibria.size() == 1);
    CHECK(equilibria[0].profile == ActionProfile{"a", "x"});
    CHECK(equilibria[0].strict);
  }
}

TEST_CASE("dominance") {
  SUBCASE("constant game has neither dominant nor dominated actions") {
    const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x", "y"},
                              {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    const DominanceReport d = dominance(g);
    CHECK(d.row_dominant.empty());
    CHECK(d.col_dominant.empty());
    CHECK(d.row_dominated.empty());
    CHECK(d.col_dominated.empty());
  }

  SUBCASE("uniformly worse row is strictly dominated") {
    const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x", "y"},
                              {{0, 0}, {0, 0}, {1, 0}, {1, 0}});
    const DominanceReport d = dominance(g);
    CHECK(d.row_dominated == std::vector<std::string>{"b"});
    CHECK(d.row_dominant == std::vector<std::string>{"a"});
  }

  SUBCASE("weak dominance needs a strict improvement somewhere") {
    const FiniteGame g = make(Orientation::payoff, {"a", "b"}, {"x", "y"},
                              {{1, 0}, {2, 0}, {1, 0}, {1, 0}});
    const DominanceReport d = dominance(g);
    CHECK(d.row_dominant == std::vector<std::string>{"a"});
    CHECK(d.row_dominated.empty());  // b is weakly, not strictly, dominated
  }
}

TEST_CASE("best response returns every tie") {
  const FiniteGame g = make(Orientation::payoff, {"a", "b", "c"}, {"x", "y"},
                            {{3, 0}, {1, 0}, {3, 0}, {0, 0}, {2, 0}, {5, 0}});
  CHECK(best_response(g, Player::row, "x") == std::vector<std::string>{"a", "b"});
  CHECK(best_response(g, Player::row, "y") == std::vector<std::string>{"c"});
  CHECK_THROWS_AS(best_response(g, Player::row, "zzz"), std::invalid_argument);
}

TEST_CASE("price of anarchy") {
  SUBCASE("coinciding equilibrium and optimum give 1") {
    const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x", "y"},
                              {{1, 1}, {1, 3}, {3, 1}, {3, 3}});
    CHECK(price_of_anarchy(g).value() == doctest::Approx(1.0));
  }

  SUBCASE("payoff orientation divides optimum by the worst equilibrium") {
    // Both diagonal profiles are strict equilibria; the worse one totals 2.
    const FiniteGame g = make(Orientation::payoff, {"a", "b"}, {"x", "y"},
                              {{3, 3}, {0, 0}, {0, 0}, {1, 1}});
    CHECK(price_of_anarchy(g).value() == doctest::Approx(3.0));
  }

  SUBCASE("zero denominator is undefined") {
    const FiniteGame g = make(Orientation::cost, {"a"}, {"x"}, {{0, 0}});
    CHECK_FALSE(price_of_anarchy(g).has_value());
  }
}

TEST_CASE("tie tolerance widens equality") {
  const FiniteGame g = make(Orientation::cost, {"a", "b"}, {"x"},
                            {{0.0, 0}, {1e-7, 0}});
  CHECK(nash_set(g) == decltype(nash_set(g)){{"a", "x"}});
  CHECK(nash_set(g, 1e-6).size() == 2);
  CHECK(best_response(g, Player::row, "x", 1e-6).size() == 2);
}

TEST_CASE("deviation and extremum oracles over random games") {
  std::mt19937 rng(7031);
  for (int trial = 0; trial < 400; ++trial) {
    const FiniteGame g = random_game(rng);
    const bool cost = g.orientation() == Orientation::cost;
    const auto reported = nash_set(g);

    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) {
        bool improvable = false;
        for (std::size_t r2 = 0; r2 < g.rows(); ++r2) {
          if (cost ? g.value(r2, c).row < g.value(r, c).row
                   : g.value(r2, c).row > g.value(r, c).row)
            improvable = true;
        }
        for (std::size_t c2 = 0; c2 < g.cols(); ++c2) {
          if (cost ? g.value(r, c2).col < g.value(r, c).col
                   : g.value(r, c2).col > g.value(r, c).col)
            improvable = true;
        }
        const bool in_set =
            reported.count({g.row_actions()[r], g.col_actions()[c]}) > 0;
        CHECK(in_set == !improvable);
      }
    }

    double best = total_value(g, 0, 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) {
        const double t = total_value(g, r, c);
        if (cost ? t < best : t > best) best = t;
      }
    }
    for (const auto& p : social_optima(g)) {
      CHECK(total_value(g, g.action_index(Player::row, p.row_action),
                        g.action_index(Player::col, p.col_action)) == best);
    }
  }
}

TEST_CASE("negating values and flipping orientation changes nothing") {
  std::mt19937 rng(9214);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteGame g = random_game(rng);
    std::vector<ValuePair> negated;
    for (const ValuePair& v : g.values()) negated.push_back({-v.row, -v.col});
    const FiniteGame mirrored(
        g.orientation() == Orientation::cost ? Orientation::payoff : Orientation::cost,
        g.row_actions(), g.col_actions(), std::move(negated));

    CHECK(nash_set(g) == nash_set(mirrored));
    CHECK(so_set(g) == so_set(mirrored));
    const DominanceReport a = dominance(g), b = dominance(mirrored);
    CHECK(a.row_dominant == b.row_dominant);
    CHECK(a.col_dominant == b.col_dominant);
    CHECK(a.row_dominated == b.row_dominated);
    CHECK(a.col_dominated == b.col_dominated);
  }
}

TEST_CASE("per-player constant shifts preserve equilibria") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteGame g = random_game(rng);
    const double shift = 7.25;

    std::vector<ValuePair> row_shifted, both_shifted;
    for (const ValuePair& v : g.values()) {
      row_shifted.push_back({v.row + shift, v.col});
      both_shifted.push_back({v.row + shift, v.col + shift});
    }
    const FiniteGame one(g.orientation(), g.row_actions(), g.col_actions(),
                         std::move(row_shifted));
    const FiniteGame both(g.orientation(), g.row_actions(), g.col_actions(),
                          std::move(both_shifted));

    CHECK(nash_set(g) == nash_set(one));
    const DominanceReport a = dominance(g), b = dominance(one);
    CHECK(a.row_dominant == b.row_dominant);
    CHECK(a.row_dominated == b.row_dominated);
    CHECK(so_set(g) == so_set(both));
  }
}

TEST_CASE("json round trip preserves the game") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteGame g = random_game(rng);
    const FiniteGame back = game_from_json(game_to_json(g));
    CHECK(back.orientation() == g.orientation());
    CHECK(back.row_actions() == g.row_actions());
    CHECK(back.col_actions() == g.col_actions());
    REQUIRE(back.values().size() == g.values().size());
    for (std::size_t i = 0; i < g.values().size(); ++i) {
      CHECK(back.values()[i] == g.values()[i]);
    }
  }
  CHECK_THROWS_AS(game_from_json(nlohmann::json{{"orientation", "upside"}}),
                  std::invalid_argument);
}
