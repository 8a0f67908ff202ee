#include "epigame/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "epigame/distancing.hpp"
#include "epigame/game.hpp"
#include "epigame/mask.hpp"
#include "epigame/numeric.hpp"
#include "epigame/serialize.hpp"

namespace epigame {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Parameter extraction with named-constraint errors.

double as_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError(name + ": must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(name + ": must be finite");
  return d;
}

double require_number(const json& p, const std::string& name) {
  if (!p.contains(name)) throw ConfigError(name + ": required parameter is missing");
  return as_number(p.at(name), name);
}

double number_or(const json& p, const std::string& name, double fallback) {
  return p.contains(name) ? as_number(p.at(name), name) : fallback;
}

int require_int(const json& p, const std::string& name) {
  const double d = require_number(p, name);
  if (d != std::floor(d)) throw ConfigError(name + ": must be an integer");
  return static_cast<int>(d);
}

bool bool_or(const json& p, const std::string& name, bool fallback) {
  if (!p.contains(name)) return fallback;
  if (!p.at(name).is_boolean()) throw ConfigError(name + ": must be a boolean");
  return p.at(name).get<bool>();
}

std::string require_text(const json& p, const std::string& name) {
  if (!p.contains(name)) throw ConfigError(name + ": required parameter is missing");
  if (!p.at(name).is_string()) throw ConfigError(name + ": must be a string");
  return p.at(name).get<std::string>();
}

std::vector<double> require_number_list(const json& p, const std::string& name) {
  if (!p.contains(name)) throw ConfigError(name + ": required parameter is missing");
  const json& v = p.at(name);
  if (!v.is_array() || v.empty()) throw ConfigError(name + ": must be a nonempty array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_number(v[i], name + "[" + std::to_string(i) + "]"));
  }
  return out;
}

double unit_interval(double v, const std::string& name) {
  if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(name + ": must lie in [0, 1]");
  return v;
}

double nonnegative(double v, const std::string& name) {
  if (!(v >= 0.0)) throw ConfigError(name + ": must be nonnegative");
  return v;
}

double positive(double v, const std::string& name) {
  if (!(v > 0.0)) throw ConfigError(name + ": must be positive");
  return v;
}

int positive_int(int v, const std::string& name) {
  if (v < 1) throw ConfigError(name + ": must be a positive integer");
  return v;
}

double open_unit_interval(double v, const std::string& name) {
  if (!(v > 0.0 && v < 1.0))
    throw ConfigError(name + ": must lie strictly between 0 and 1");
  return v;
}

HealthStatus parse_status(const std::string& s, const std::string& name) {
  if (s == "susceptible") return HealthStatus::susceptible;
  if (s == "infected") return HealthStatus::infected;
  throw ConfigError(name + ": must be \"susceptible\" or \"infected\"");
}

// ---------------------------------------------------------------------------
// Model registry.

const std::map<std::string, std::set<std::string>>& model_table() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"mask_basic", {"c_out", "c_in", "c_i", "status_first", "status_second"}},
      {"mask_bayesian", {"rho", "c_use", "c_i", "include_baseline_risk"}},
      {"mask_efficiency", {"a", "b", "rho", "c_use", "c_i"}},
      {"mask_multiplayer", {"c_use", "c_i", "n_players", "k_infected", "g_contacts"}},
      {"distancing",
       {"benefit", "cost", "benefit_row", "benefit_col", "cost_row", "cost_col",
        "mortality", "life_value", "rho"}},
      {"distancing_extended",
       {"benefit_poly", "cost_poly", "mortality", "life_value", "rho", "bracket",
        "gathering_cap", "t"}},
      {"vacc_duration", {"e_alpha", "d_alpha", "e_beta", "d_beta"}},
      {"vacc_availability", {"e_alpha", "e_beta", "t0", "delta"}},
      {"vacc_combined", {"e_alpha", "d_alpha", "e_beta", "d_beta", "t0", "delta"}},
      {"vacc_side_effect",
       {"e_alpha", "e_beta", "b_alpha", "b_beta", "c_i", "c_s", "epsilon"}},
      {"availability_game",
       {"n_players", "b_alpha", "b_beta", "c_i", "t0", "delta", "p", "p_symmetric"}},
  };
  return table;
}

const std::set<std::string>& known_keys(const std::string& model) {
  auto it = model_table().find(model);
  if (it == model_table().end()) {
    std::string message = "unknown model: " + model + "; expected one of";
    for (const auto& [name, keys] : model_table()) message += " " + name;
    throw ConfigError(message);
  }
  return it->second;
}

void check_keys(const json& params, const std::string& model) {
  const auto& known = known_keys(model);
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!known.count(it.key())) {
      throw ConfigError("unknown parameter '" + it.key() + "' for model " + model);
    }
  }
}

// ---------------------------------------------------------------------------
// Typed parameter records.

DistancingScenario distancing_from(const json& p) {
  DistancingScenario s;
  if (p.contains("benefit") || p.contains("cost")) {
    if (p.contains("benefit_row") || p.contains("benefit_col") ||
        p.contains("cost_row") || p.contains("cost_col")) {
      throw ConfigError("benefit/cost: give either symmetric or per-player values");
    }
    s.benefit_row = s.benefit_col = nonnegative(require_number(p, "benefit"), "benefit");
    s.cost_row = s.cost_col = nonnegative(require_number(p, "cost"), "cost");
  } else {
    s.benefit_row = nonnegative(require_number(p, "benefit_row"), "benefit_row");
    s.benefit_col = nonnegative(require_number(p, "benefit_col"), "benefit_col");
    s.cost_row = nonnegative(require_number(p, "cost_row"), "cost_row");
    s.cost_col = nonnegative(require_number(p, "cost_col"), "cost_col");
  }
  s.mortality = unit_interval(require_number(p, "mortality"), "mortality");
  s.life_value = nonnegative(require_number(p, "life_value"), "life_value");
  s.rho = unit_interval(require_number(p, "rho"), "rho");
  return s;
}

Polynomial polynomial_from(const json& p, const std::string& name) {
  Polynomial poly;
  poly.coefficients = require_number_list(p, name);
  return poly;
}

void check_poly_nonnegative(const Polynomial& poly, double lo, double hi,
                            const std::string& name) {
  for (int i = 0; i < 64; ++i) {
    const double t = lo + (hi - lo) * i / 63.0;
    if (poly(t) < 0.0) {
      throw ConfigError(name + ": must be nonnegative on the bracket");
    }
  }
}

AvailabilityParams availability_from(const json& p, const RunOptions& options) {
  AvailabilityParams ap;
  ap.n_players = positive_int(require_int(p, "n_players"), "n_players");
  ap.benefit_alpha = require_number(p, "b_alpha");
  ap.benefit_beta = require_number(p, "b_beta");
  ap.infection_cost = nonnegative(require_number(p, "c_i"), "c_i");
  ap.t0 = nonnegative(require_number(p, "t0"), "t0");
  ap.discount = {open_unit_interval(require_number(p, "delta"), "delta"),
                 options.convention};
  return ap;
}

MaskParams mask_from(const json& p) {
  MaskParams m;
  m.c_out = number_or(p, "c_out", m.c_out);
  m.c_in = number_or(p, "c_in", m.c_in);
  m.c_use = nonnegative(number_or(p, "c_use", m.c_use), "c_use");
  m.c_i = nonnegative(number_or(p, "c_i", m.c_i), "c_i");
  m.rho = unit_interval(number_or(p, "rho", m.rho), "rho");
  m.a = unit_interval(number_or(p, "a", m.a), "a");
  m.b = unit_interval(number_or(p, "b", m.b), "b");
  if (p.contains("n_players"))
    m.n_players = positive_int(require_int(p, "n_players"), "n_players");
  if (p.contains("g_contacts"))
    m.g_contacts = positive_int(require_int(p, "g_contacts"), "g_contacts");
  if (p.contains("k_infected")) {
    m.k_infected = require_int(p, "k_infected");
    if (m.k_infected < 0 || m.k_infected > m.n_players) {
      throw ConfigError("k_infected: must lie in [0, n_players]");
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Per-model evaluation.

json eval_game_with_report(const FiniteGame& game, double tie_tol) {
  return json{{"game", game_to_json(game)},
              {"equilibrium", report_to_json(analyze(game, tie_tol))}};
}

json evaluate_model(const std::string& model, const json& p, const RunOptions& options,
                    std::vector<std::string>& notes) {
  const double tol = options.tolerance;

  if (model == "mask_basic") {
    MaskParams m = mask_from(p);
    const HealthStatus first = parse_status(require_text(p, "status_first"), "status_first");
    const HealthStatus second =
        parse_status(require_text(p, "status_second"), "status_second");
    for (const std::string& w : m.validate()) notes.push_back(w);
    json out = eval_game_with_report(build_basic_mask_game(m, first, second), tol);
    if (first != second) notes.push_back("the susceptible player takes the row side");
    return out;
  }

  if (model == "mask_bayesian") {
    MaskParams m = mask_from(p);
    const bool baseline = bool_or(p, "include_baseline_risk", false);
    if (!(m.c_use < m.c_i)) notes.push_back("expected c_use < c_i");
    json out = eval_game_with_report(build_bayesian_mask_game(m, baseline), tol);
    if (baseline)
      notes.push_back("cell values include the constant baseline risk rho*c_i");
    return out;
  }

  if (model == "mask_efficiency") {
    MaskParams m = mask_from(p);
    if (!(m.c_i > 0.0)) throw ConfigError("c_i: must be positive");
    if (!(m.c_use < m.c_i)) notes.push_back("expected c_use < c_i");
    json out = eval_game_with_report(build_efficiency_mask_game(m), tol);
    out["classification"] = regime_to_json(classify_efficiency_regime(m));
    return out;
  }

  if (model == "mask_multiplayer") {
    MaskParams m = mask_from(p);
    if (!(m.c_i > 0.0)) throw ConfigError("c_i: must be positive");
    if (!(m.c_use < m.c_i)) notes.push_back("expected c_use < c_i");
    json costs;
    costs["susceptible"] = {
        {"no", multiplayer_mask_cost(m, MaskAction::no, HealthStatus::susceptible)},
        {"use", multiplayer_mask_cost(m, MaskAction::use, HealthStatus::susceptible)}};
    costs["infected"] = {
        {"no", multiplayer_mask_cost(m, MaskAction::no, HealthStatus::infected)},
        {"use", multiplayer_mask_cost(m, MaskAction::use, HealthStatus::infected)}};
    return json{{"costs", costs},
                {"threshold", threshold_to_json(multiplayer_mask_threshold(m))}};
  }

  if (model == "distancing") {
    const DistancingScenario s = distancing_from(p);
    json out = eval_game_with_report(build_distancing_game(s), tol);
    out["classification"] = regime_to_json(classify_distancing(s));
    return out;
  }

  if (model == "distancing_extended") {
    DistancingScenario s;
    s.mortality = unit_interval(require_number(p, "mortality"), "mortality");
    s.life_value = nonnegative(require_number(p, "life_value"), "life_value");
    s.rho = unit_interval(require_number(p, "rho"), "rho");
    TimeProfile profile{polynomial_from(p, "benefit_poly"),
                        polynomial_from(p, "cost_poly")};
    const std::vector<double> bracket = require_number_list(p, "bracket");
    if (bracket.size() != 2 || !(bracket[0] < bracket[1]) || bracket[0] < 0.0) {
      throw ConfigError("bracket: must be [lo, hi] with 0 <= lo < hi");
    }
    check_poly_nonnegative(profile.benefit, bracket[0], bracket[1], "benefit_poly");
    check_poly_nonnegative(profile.cost, bracket[0], bracket[1], "cost_poly");

    json out;
    const CrossoverResult crossing =
        crossover_time(s, profile, bracket[0], bracket[1]);
    json cj{{"non_monotone", crossing.non_monotone}};
    if (crossing.time) {
      cj["time"] = *crossing.time;
      cj["residual"] = crossing.residual;
      if (p.contains("gathering_cap")) {
        const double cap = positive(require_number(p, "gathering_cap"), "gathering_cap");
        cj["effective_scale"] = apply_gathering_cap(*crossing.time, cap);
      }
    } else {
      cj["time"] = "none";
    }
    out["crossover"] = cj;

    if (p.contains("t")) {
      const double t = nonnegative(require_number(p, "t"), "t");
      out["utilities"] = {
          {"go_vs_go", extended_utility(s, profile, t, Outing::go, Outing::go)},
          {"go_vs_stay", extended_utility(s, profile, t, Outing::go, Outing::stay)},
          {"stay", extended_utility(s, profile, t, Outing::stay, Outing::go)}};
    }
    return out;
  }

  if (model == "vacc_duration") {
    VaccineProfile a, b;
    a.efficiency = unit_interval(require_number(p, "e_alpha"), "e_alpha");
    a.duration = nonnegative(require_number(p, "d_alpha"), "d_alpha");
    b.efficiency = unit_interval(require_number(p, "e_beta"), "e_beta");
    b.duration = nonnegative(require_number(p, "d_beta"), "d_beta");
    const UtilityPair u = duration_efficiency_utilities(a, b);
    return json{{"utilities", {{"alpha", u.alpha}, {"beta", u.beta}}},
                {"choice", to_string(choose_vaccine(u, tol))}};
  }

  if (model == "vacc_availability" || model == "vacc_combined") {
    VaccineProfile a, b;
    a.efficiency = unit_interval(require_number(p, "e_alpha"), "e_alpha");
    b.efficiency = unit_interval(require_number(p, "e_beta"), "e_beta");
    b.available_from = nonnegative(require_number(p, "t0"), "t0");
    const DiscountSpec discount{open_unit_interval(require_number(p, "delta"), "delta"),
                                options.convention};
    UtilityPair u;
    if (model == "vacc_combined") {
      a.duration = nonnegative(require_number(p, "d_alpha"), "d_alpha");
      b.duration = nonnegative(require_number(p, "d_beta"), "d_beta");
      u = duration_efficiency_availability_utilities(a, b, discount);
    } else {
      u = availability_efficiency_utilities(a, b, discount);
    }
    notes.push_back("log convention: " + to_string(options.convention));
    return json{{"utilities", {{"alpha", u.alpha}, {"beta", u.beta}}},
                {"choice", to_string(choose_vaccine(u, tol))}};
  }

  if (model == "vacc_side_effect") {
    VaccineProfile a, b;
    a.efficiency = unit_interval(require_number(p, "e_alpha"), "e_alpha");
    b.efficiency = unit_interval(require_number(p, "e_beta"), "e_beta");
    a.benefit = require_number(p, "b_alpha");
    b.benefit = require_number(p, "b_beta");
    a.infection_cost = b.infection_cost = nonnegative(require_number(p, "c_i"), "c_i");
    a.side_effect_cost = b.side_effect_cost = nonnegative(require_number(p, "c_s"), "c_s");
    a.side_effect_prob = 0.0;
    b.side_effect_prob = unit_interval(require_number(p, "epsilon"), "epsilon");
    const UtilityPair u = side_effect_utilities(a, b);
    return json{{"utilities", {{"alpha", u.alpha}, {"beta", u.beta}}},
                {"choice", to_string(choose_vaccine(u, tol))}};
  }

  if (model == "availability_game") {
    const AvailabilityParams ap = availability_from(p, options);
    json out;
    if (ap.benefit_alpha != ap.benefit_beta) {
      out["equilibrium"] = equilibrium_to_json(symmetric_equilibrium(ap));
    } else {
      notes.push_back("equal benefits: the closed-form equilibrium is undefined");
    }
    const numeric::Argmax printed = symmetric_argmax_numeric(ap);
    const numeric::Argmax integral = symmetric_argmax_integral(ap);
    const numeric::Argmax subtracted = symmetric_argmax_cost_subtracted(ap);
    out["argmax"] = {{"printed", {{"p", printed.x}, {"utility", printed.value}}},
                     {"integral", {{"p", integral.x}, {"utility", integral.value}}},
                     {"cost_subtracted",
                      {{"p", subtracted.x}, {"utility", subtracted.value}}}};

    if (p.contains("p")) {
      std::vector<double> prefs = require_number_list(p, "p");
      for (std::size_t i = 0; i < prefs.size(); ++i) {
        unit_interval(prefs[i], "p[" + std::to_string(i) + "]");
      }
      if (prefs.size() != static_cast<std::size_t>(ap.n_players)) {
        throw ConfigError("p: must list one preference per player");
      }
      const PreferenceProfile profile(prefs, ap.t0);
      json players = json::array();
      for (std::size_t n = 0; n < profile.size(); ++n) {
        players.push_back(
            json{{"player", n},
                 {"preference", profile.preference(n)},
                 {"direct", availability_utility_direct(ap, profile, n)},
                 {"closed", availability_utility_closed(ap, profile, n)},
                 {"telescoped", availability_utility_telescoped(ap, profile, n)}});
      }
      out["players"] = players;
    }
    if (p.contains("p_symmetric")) {
      const double ps = unit_interval(require_number(p, "p_symmetric"), "p_symmetric");
      out["symmetric_utility"] = symmetric_utility(ap, ps);
      out["symmetric_utility_cost_subtracted"] =
          symmetric_utility_cost_subtracted(ap, ps);
      out["symmetric_utility_integral"] = symmetric_utility_integral(ap, ps);
    }
    return out;
  }

  throw ConfigError("unknown model: " + model);
}

// Cartesian product of the sweep axes, first axis slowest.
std::vector<json> resolve_points(const ScenarioConfig& config) {
  std::vector<json> points;
  std::size_t total = 1;
  for (const SweepAxis& axis : config.sweep) total *= axis.values.size();
  points.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    json p = config.parameters;
    std::size_t remainder = index;
    for (auto axis = config.sweep.rbegin(); axis != config.sweep.rend(); ++axis) {
      p[axis->name] = axis->values[remainder % axis->values.size()];
      remainder /= axis->values.size();
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace

const std::vector<std::string>& known_models() {
  static const std::vector<std::string> models = [] {
    std::vector<std::string> out;
    for (const auto& [name, keys] : model_table()) out.push_back(name);
    return out;
  }();
  return models;
}

ScenarioConfig parse_config(const json& document) {
  if (!document.is_object()) throw ConfigError("configuration must be a JSON object");
  for (auto it = document.begin(); it != document.end(); ++it) {
    if (it.key() != "model" && it.key() != "parameters" && it.key() != "sweep") {
      throw ConfigError("unknown top-level key '" + it.key() + "'");
    }
  }
  ScenarioConfig config;
  if (!document.contains("model") || !document.at("model").is_string()) {
    throw ConfigError("model: required string is missing");
  }
  config.model = document.at("model").get<std::string>();
  known_keys(config.model);  // rejects unknown models

  config.parameters = document.value("parameters", json::object());
  if (!config.parameters.is_object()) {
    throw ConfigError("parameters: must be an object");
  }
  check_keys(config.parameters, config.model);

  if (document.contains("sweep")) {
    const json& sweep = document.at("sweep");
    if (!sweep.is_array()) throw ConfigError("sweep: must be an array");
    for (const json& axis : sweep) {
      if (!axis.is_object() || !axis.contains("name") || !axis.contains("values")) {
        throw ConfigError("sweep: each axis needs {name, values}");
      }
      SweepAxis out;
      out.name = axis.at("name").get<std::string>();
      if (!known_keys(config.model).count(out.name)) {
        throw ConfigError("sweep axis '" + out.name + "' is not a parameter of model " +
                          config.model);
      }
      if (!axis.at("values").is_array() || axis.at("values").empty()) {
        throw ConfigError("sweep axis '" + out.name + "': values must be a nonempty array");
      }
      for (const json& v : axis.at("values")) out.values.push_back(v);
      config.sweep.push_back(std::move(out));
    }
  }

  // Validate the base point and every sweep point eagerly so that domain
  // violations surface at load time with the parameter named.
  RunOptions probe;
  for (const json& p : resolve_points(config)) {
    std::vector<std::string> notes;
    evaluate_model(config.model, p, probe, notes);
  }
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file: " + path.string());
  json document;
  try {
    in >> document;
  } catch (const json::exception& e) {
    throw ConfigError("configuration parse error in " + path.string() + ": " + e.what());
  }
  return parse_config(document);
}

bool RunResult::has_discrepancies() const {
  return std::any_of(points.begin(), points.end(),
                     [](const RunPoint& p) { return !p.discrepancies.empty(); });
}

RunResult run(const ScenarioConfig& config, const RunOptions& options) {
  const std::vector<json> parameter_sets = resolve_points(config);
  RunResult result;
  result.model = config.model;
  result.points.resize(parameter_sets.size());

  auto evaluate_one = [&](std::size_t i) {
    RunPoint& point = result.points[i];
    point.index = i;
    point.parameters = parameter_sets[i];
    try {
      point.output =
          evaluate_model(config.model, parameter_sets[i], options, point.notes);
    } catch (const ConfigError& e) {
      throw ConfigError("sweep point " + std::to_string(i) + ": " + e.what());
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || parameter_sets.size() <= 1) {
    for (std::size_t i = 0; i < parameter_sets.size(); ++i) evaluate_one(i);
    return result;
  }

  std::vector<std::exception_ptr> errors(parameter_sets.size());
  std::vector<std::thread> workers;
  const int worker_count = std::min<std::size_t>(jobs, parameter_sets.size());
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < parameter_sets.size(); i += worker_count) {
        try {
          evaluate_one(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Verification harness.

namespace {

double rel_gap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

void add_check(std::vector<CheckLine>& checks, CheckLine::Status status,
               std::string label, std::string detail) {
  checks.push_back({status, std::move(label), std::move(detail)});
}

// Literal deviation scan, written independently of the solver.
bool profile_is_equilibrium(const FiniteGame& g, std::size_t r, std::size_t c) {
  const bool cost = g.orientation() == Orientation::cost;
  for (std::size_t r2 = 0; r2 < g.rows(); ++r2) {
    const double now = g.value(r, c).row, then = g.value(r2, c).row;
    if (cost ? then < now : then > now) return false;
  }
  for (std::size_t c2 = 0; c2 < g.cols(); ++c2) {
    const double now = g.value(r, c).col, then = g.value(r, c2).col;
    if (cost ? then < now : then > now) return false;
  }
  return true;
}

void verify_game(const FiniteGame& game, const std::string& where,
                 std::vector<CheckLine>& checks) {
  const auto equilibria = pure_nash_equilibria(game);
  std::set<std::pair<std::size_t, std::size_t>> reported;
  for (const NashEquilibrium& ne : equilibria) {
    reported.insert({game.action_index(Player::row, ne.profile.row_action),
                     game.action_index(Player::col, ne.profile.col_action)});
  }
  bool deviation_ok = true;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      if (profile_is_equilibrium(game, r, c) != reported.count({r, c})) {
        deviation_ok = false;
      }
    }
  }
  add_check(checks, deviation_ok ? CheckLine::Status::pass : CheckLine::Status::fail,
            where + "deviation oracle",
            deviation_ok ? "every reported equilibrium survives the deviation scan"
                         : "solver disagrees with the deviation scan");

  const auto optima = social_optima(game);
  const bool cost = game.orientation() == Orientation::cost;
  double best = total_value(game, 0, 0);
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      const double t = total_value(game, r, c);
      if (cost ? t < best : t > best) best = t;
    }
  }
  bool so_ok = !optima.empty();
  for (const ActionProfile& p : optima) {
    const double t = total_value(game, game.action_index(Player::row, p.row_action),
                                 game.action_index(Player::col, p.col_action));
    if (t != best) so_ok = false;
  }
  add_check(checks, so_ok ? CheckLine::Status::pass : CheckLine::Status::fail,
            where + "social optimum extremum",
            so_ok ? "reported optima attain the exhaustive extremum"
                  : "reported optima miss the exhaustive extremum");
}

void verify_point(const std::string& model, const json& p, const RunOptions& options,
                  const std::string& where, std::vector<CheckLine>& checks,
                  json& report) {
  const double quad_tol = options.tolerance > 0.0 ? options.tolerance : 1e-9;
  const double argmax_tol = options.tolerance > 0.0 ? options.tolerance : 0.005;
  std::vector<std::string> notes;

  if (model == "mask_basic") {
    MaskParams m = mask_from(p);
    verify_game(build_basic_mask_game(m, parse_status(require_text(p, "status_first"),
                                                      "status_first"),
                                      parse_status(require_text(p, "status_second"),
                                                   "status_second")),
                where, checks);
    return;
  }

  if (model == "mask_bayesian") {
    MaskParams m = mask_from(p);
    const FiniteGame plain = build_bayesian_mask_game(m, false);
    verify_game(plain, where, checks);
    const FiniteGame shifted = build_bayesian_mask_game(m, true);
    const bool same = pure_nash_equilibria(plain) == pure_nash_equilibria(shifted) &&
                      social_optima(plain) == social_optima(shifted);
    add_check(checks, same ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "baseline shift invariance",
              same ? "adding the constant risk term changes no equilibrium"
                   : "the constant risk term changed an equilibrium set");
    return;
  }

  if (model == "mask_efficiency") {
    MaskParams m = mask_from(p);
    const FiniteGame game = build_efficiency_mask_game(m);
    verify_game(game, where, checks);
    const EfficiencyRegime regime = classify_efficiency_regime(m);
    if (regime.boundary) {
      add_check(checks, CheckLine::Status::pass, where + "classifier agreement",
                "boundary point, not classified");
      return;
    }
    const auto equilibria = pure_nash_equilibria(game);
    std::set<std::pair<std::string, std::string>> ne;
    for (const auto& e : equilibria) ne.insert({e.profile.row_action, e.profile.col_action});
    std::set<std::pair<std::string, std::string>> expected;
    switch (*regime.regime) {
      case MaskRegime::both_use: expected = {{"use", "use"}}; break;
      case MaskRegime::exactly_one_uses: expected = {{"no", "use"}, {"use", "no"}}; break;
      case MaskRegime::nobody_uses: expected = {{"no", "no"}}; break;
    }
    const bool ok = ne == expected;
    add_check(checks, ok ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "classifier agreement",
              ok ? "threshold classification matches the equilibrium set"
                 : "threshold classification disagrees with the equilibrium set");
    return;
  }

  if (model == "mask_multiplayer") {
    MaskParams m = mask_from(p);
    const MultiplayerThreshold th = multiplayer_mask_threshold(m);
    const double no_cost = multiplayer_mask_cost(m, MaskAction::no, HealthStatus::susceptible);
    const double use_cost =
        multiplayer_mask_cost(m, MaskAction::use, HealthStatus::susceptible);
    bool ok = true;
    if (th.best_response) {
      ok = (*th.best_response == MaskAction::no) == (no_cost < use_cost);
    } else {
      ok = no_cost == use_cost;
    }
    add_check(checks, ok ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "threshold vs direct costs",
              ok ? "threshold best response matches the cheaper action"
                 : "threshold best response contradicts the direct costs");
    return;
  }

  if (model == "distancing") {
    const DistancingScenario s = distancing_from(p);
    const FiniteGame game = build_distancing_game(s);
    verify_game(game, where, checks);
    const DistancingRegime regime = classify_distancing(s);
    const auto equilibria = pure_nash_equilibria(game);
    bool stay_found = false, go_found = false;
    for (const auto& e : equilibria) {
      if (e.profile == ActionProfile{"stay", "stay"}) stay_found = true;
      if (e.profile == ActionProfile{"go", "go"}) go_found = true;
    }
    bool ok = stay_found == regime.stay_stay_is_ne;
    if (!regime.boundary) ok = ok && go_found == regime.go_go_is_ne;
    std::vector<ActionProfile> optima = social_optima(game);
    std::sort(optima.begin(), optima.end());
    std::vector<ActionProfile> expected = regime.social_optima;
    std::sort(expected.begin(), expected.end());
    ok = ok && optima == expected;
    add_check(checks, ok ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "classifier agreement",
              ok ? "regime report matches the solver"
                 : "regime report disagrees with the solver");
    return;
  }

  if (model == "distancing_extended") {
    DistancingScenario s;
    s.mortality = unit_interval(require_number(p, "mortality"), "mortality");
    s.life_value = nonnegative(require_number(p, "life_value"), "life_value");
    s.rho = unit_interval(require_number(p, "rho"), "rho");
    TimeProfile profile{polynomial_from(p, "benefit_poly"), polynomial_from(p, "cost_poly")};
    const std::vector<double> bracket = require_number_list(p, "bracket");
    if (bracket.size() != 2 || !(bracket[0] < bracket[1]) || bracket[0] < 0.0) {
      throw ConfigError("bracket: must be [lo, hi] with 0 <= lo < hi");
    }
    const CrossoverResult crossing = crossover_time(s, profile, bracket[0], bracket[1]);
    if (!crossing.time) {
      add_check(checks, CheckLine::Status::pass, where + "crossover search",
                "no sign change over the bracket, no crossover reported");
      return;
    }
    const double allowed = std::max(options.tolerance,
                                    1e-9 * std::max(1.0, s.mortality * s.life_value));
    const bool ok = std::abs(crossing.residual) <= allowed;
    add_check(checks, ok ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "crossover residual",
              "residual " + format_double(crossing.residual) + " against " +
                  format_double(allowed));
    add_check(checks, CheckLine::Status::pass, where + "crossover scan",
              crossing.non_monotone
                  ? "difference is not monotone over the scan; multiple roots possible"
                  : "difference is monotone over the scan");
    return;
  }

  if (model == "vacc_duration") {
    VaccineProfile a, b;
    a.efficiency = unit_interval(require_number(p, "e_alpha"), "e_alpha");
    a.duration = nonnegative(require_number(p, "d_alpha"), "d_alpha");
    b.efficiency = unit_interval(require_number(p, "e_beta"), "e_beta");
    b.duration = nonnegative(require_number(p, "d_beta"), "d_beta");
    const UtilityPair closed = duration_efficiency_utilities(a, b);
    const UtilityPair quad = duration_efficiency_utilities_by_quadrature(a, b);
    const double gap = std::max(rel_gap(closed.alpha, quad.alpha),
                                rel_gap(closed.beta, quad.beta));
    add_check(checks,
              gap <= quad_tol ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "closed form vs quadrature",
              "max relative gap " + format_double(gap));
    return;
  }

  if (model == "vacc_availability" || model == "vacc_combined") {
    VaccineProfile a, b;
    a.efficiency = unit_interval(require_number(p, "e_alpha"), "e_alpha");
    b.efficiency = unit_interval(require_number(p, "e_beta"), "e_beta");
    b.available_from = nonnegative(require_number(p, "t0"), "t0");
    const double delta = open_unit_interval(require_number(p, "delta"), "delta");
    // The integrals fix the natural-log antiderivative, so the oracle runs
    // against the natural-convention closed forms.
    const DiscountSpec natural{delta, LogConvention::natural};
    UtilityPair closed, quad;
    if (model == "vacc_combined") {
      a.duration = nonnegative(require_number(p, "d_alpha"), "d_alpha");
      b.duration = nonnegative(require_number(p, "d_beta"), "d_beta");
      closed = duration_efficiency_availability_utilities(a, b, natural);
      quad = duration_efficiency_availability_utilities_by_quadrature(a, b, delta);
    } else {
      closed = availability_efficiency_utilities(a, b, natural);
      quad = availability_efficiency_utilities_by_quadrature(a, b, delta);
    }
    const double gap =
        std::max(rel_gap(closed.alpha, quad.alpha), rel_gap(closed.beta, quad.beta));
    add_check(checks,
              gap <= quad_tol ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "closed form vs quadrature",
              "max relative gap " + format_double(gap));

    const DiscountSpec base10{delta, LogConvention::base10};
    const UtilityPair other = model == "vacc_combined"
                                  ? duration_efficiency_availability_utilities(a, b, base10)
                                  : availability_efficiency_utilities(a, b, base10);
    const bool same_choice = choose_vaccine(closed) == choose_vaccine(other);
    add_check(checks, same_choice ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "log convention invariance",
              same_choice ? "both conventions select the same vaccine"
                          : "conventions disagree on the selected vaccine");
    return;
  }

  if (model == "vacc_side_effect") {
    VaccineProfile a, b;
    a.efficiency = unit_interval(require_number(p, "e_alpha"), "e_alpha");
    b.efficiency = unit_interval(require_number(p, "e_beta"), "e_beta");
    a.benefit = require_number(p, "b_alpha");
    b.benefit = require_number(p, "b_beta");
    a.infection_cost = b.infection_cost = nonnegative(require_number(p, "c_i"), "c_i");
    a.side_effect_cost = b.side_effect_cost = nonnegative(require_number(p, "c_s"), "c_s");
    b.side_effect_prob = unit_interval(require_number(p, "epsilon"), "epsilon");
    const UtilityPair u = side_effect_utilities(a, b);
    // Independent route: the decision inequality rather than the utilities.
    const double lhs = b.benefit - a.benefit;
    const double rhs = b.side_effect_prob * b.side_effect_cost -
                       (b.efficiency - a.efficiency) * a.infection_cost;
    const VaccineChoice by_utilities = choose_vaccine(u);
    const VaccineChoice by_inequality =
        lhs == rhs ? VaccineChoice::tie
                   : (lhs < rhs ? VaccineChoice::alpha : VaccineChoice::beta);
    const bool ok = by_utilities == by_inequality;
    add_check(checks, ok ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "utility vs decision inequality",
              ok ? "both routes pick the same vaccine"
                 : "utility comparison disagrees with the decision inequality");
    return;
  }

  if (model == "availability_game") {
    const AvailabilityParams ap = availability_from(p, options);
    std::vector<double> prefs;
    if (p.contains("p")) {
      prefs = require_number_list(p, "p");
    } else {
      for (int i = 0; i < ap.n_players; ++i) {
        prefs.push_back(ap.n_players == 1 ? 0.0
                                          : static_cast<double>(i) / (ap.n_players - 1));
      }
    }
    const PreferenceProfile profile(prefs, ap.t0);
    const Lemma7Report lemma = verify_lemma7(ap, profile, quad_tol);
    report["lemma7"] = lemma7_to_json(lemma);
    add_check(checks,
              lemma.telescoped_within_tolerance ? CheckLine::Status::pass
                                                : CheckLine::Status::fail,
              where + "window sum vs telescoped form",
              "max gap " + format_double(lemma.max_abs_gap_telescoped));
    add_check(checks,
              lemma.closed_within_tolerance ? CheckLine::Status::pass
                                            : CheckLine::Status::discrepancy,
              where + "window sum vs closed form as printed",
              "max gap " + format_double(lemma.max_abs_gap_closed));
    const bool identity_ok = lemma.telescoping_residual <= 1e-12 * ap.n_players;
    add_check(checks, identity_ok ? CheckLine::Status::pass : CheckLine::Status::fail,
              where + "telescoping identity",
              "residual " + format_double(lemma.telescoping_residual));

    if (ap.benefit_alpha != ap.benefit_beta) {
      const SymmetricEquilibrium eq = symmetric_equilibrium(ap);
      const numeric::Argmax printed = symmetric_argmax_numeric(ap);
      const numeric::Argmax integral = symmetric_argmax_integral(ap);
      const numeric::Argmax subtracted = symmetric_argmax_cost_subtracted(ap);
      report["symmetric"] = {{"equilibrium", equilibrium_to_json(eq)},
                             {"argmax_printed", printed.x},
                             {"argmax_integral", integral.x},
                             {"argmax_cost_subtracted", subtracted.x}};
      if (eq.kind == SymmetricEquilibrium::Kind::degenerate) {
        add_check(checks, CheckLine::Status::pass, where + "symmetric layers",
                  "degenerate availability (t0 = 0), nothing to compare");
      } else {
        const bool agree = std::abs(eq.p - printed.x) <= argmax_tol &&
                           std::abs(eq.p - integral.x) <= argmax_tol &&
                           std::abs(printed.x - integral.x) <= argmax_tol;
        add_check(checks,
                  agree ? CheckLine::Status::pass : CheckLine::Status::discrepancy,
                  where + "symmetric layers",
                  "closed-form point " + format_double(eq.p) + ", printed-curve argmax " +
                      format_double(printed.x) + ", integral-curve argmax " +
                      format_double(integral.x) + ", cost-subtracted argmax " +
                      format_double(subtracted.x));
      }
    }
    return;
  }

  throw ConfigError("unknown model: " + model);
}

}  // namespace

bool VerifyResult::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckLine& c) {
    return c.status == CheckLine::Status::fail;
  });
}

bool VerifyResult::has_discrepancies() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckLine& c) {
    return c.status == CheckLine::Status::discrepancy;
  });
}

VerifyResult verify(const ScenarioConfig& config, const RunOptions& options) {
  VerifyResult result;
  result.report["model"] = config.model;
  const std::vector<json> points = resolve_points(config);
  json point_reports = json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where =
        points.size() > 1 ? "point " + std::to_string(i) + ": " : "";
    json point_report;
    verify_point(config.model, points[i], options, where, result.checks, point_report);
    if (!point_report.is_null()) point_reports.push_back(point_report);
  }
  if (!point_reports.empty()) result.report["points"] = point_reports;

  json check_list = json::array();
  for (const CheckLine& c : result.checks) {
    check_list.push_back({{"status", c.status == CheckLine::Status::pass
                                         ? "pass"
                                         : (c.status == CheckLine::Status::discrepancy
                                                ? "discrepancy"
                                                : "fail")},
                          {"label", c.label},
                          {"detail", c.detail}});
  }
  result.report["checks"] = check_list;
  return result;
}

// ---------------------------------------------------------------------------
// Emitters.

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string format_check(const CheckLine& line) {
  const char* tag = line.status == CheckLine::Status::pass
                        ? "pass"
                        : (line.status == CheckLine::Status::discrepancy ? "gap " : "FAIL");
  return std::string("[") + tag + "] " + line.label + ": " + line.detail;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

void flatten_numeric(const json& value, const std::string& prefix,
                     std::map<std::string, std::string>& cells) {
  if (value.is_number()) {
    cells[prefix] = format_double(value.get<double>());
  } else if (value.is_boolean()) {
    cells[prefix] = value.get<bool>() ? "1" : "0";
  } else if (value.is_object()) {
    for (auto it = value.begin(); it != value.end(); ++it) {
      flatten_numeric(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                      cells);
    }
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      flatten_numeric(value[i], prefix + "." + std::to_string(i), cells);
    }
  }
}

}  // namespace

std::string result_to_csv(const RunResult& result) {
  std::vector<std::map<std::string, std::string>> flattened(result.points.size());
  std::set<std::string> columns;
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    flatten_numeric(result.points[i].parameters, "param", flattened[i]);
    flatten_numeric(result.points[i].output, "", flattened[i]);
    for (const auto& [key, cell] : flattened[i]) columns.insert(key);
  }

  std::string out = "index";
  for (const std::string& column : columns) out += "," + column;
  out += '\n';
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    out += std::to_string(result.points[i].index);
    for (const std::string& column : columns) {
      out += ',';
      auto it = flattened[i].find(column);
      if (it != flattened[i].end()) out += it->second;
    }
    out += '\n';
  }
  return out;
}

json result_to_json(const RunResult& result) {
  json points = json::array();
  for (const RunPoint& p : result.points) {
    points.push_back(json{{"index", p.index},
                          {"parameters", p.parameters},
                          {"output", p.output},
                          {"notes", p.notes},
                          {"discrepancies", p.discrepancies}});
  }
  return json{{"model", result.model}, {"points", points}};
}

}  // namespace epigame
