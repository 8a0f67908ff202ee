#include "epigame/vaccination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epigame {

namespace {

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

// Head quadrature plus exact tail for integral of coeff * delta^t over
// [from, infinity). `efolds` controls where the head ends.
double discounted_integral_to_infinity(double coeff, double delta, double from,
                                       double efolds = 40.0) {
  const double ln_delta = std::log(delta);
  const double horizon = from + efolds / (-ln_delta);
  const int segments = numeric::segments_for_rate(ln_delta, from, horizon);
  const double head = numeric::integrate(
      [&](double t) { return coeff * std::pow(delta, t); }, from, horizon, segments);
  const double tail = coeff * std::pow(delta, horizon) / (-ln_delta);
  return head + tail;
}

double discounted_integral(double coeff, double delta, double a, double b) {
  const double ln_delta = std::log(delta);
  const int segments = numeric::segments_for_rate(ln_delta, a, b);
  return numeric::integrate([&](double t) { return coeff * std::pow(delta, t); }, a, b,
                            segments);
}

}  // namespace

void DiscountSpec::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must lie strictly between 0 and 1");
  }
}

double DiscountSpec::log_delta() const {
  validate();
  return convention == LogConvention::natural ? std::log(delta) : std::log10(delta);
}

void VaccineProfile::validate() const {
  check_unit_interval(efficiency, "efficiency");
  check_unit_interval(side_effect_prob, "side_effect_prob");
  if (duration < 0.0) throw std::invalid_argument("duration must be nonnegative");
  if (available_from < 0.0)
    throw std::invalid_argument("available_from must be nonnegative");
}

UtilityPair duration_efficiency_utilities(const VaccineProfile& alpha,
                                          const VaccineProfile& beta) {
  alpha.validate();
  beta.validate();
  return {alpha.efficiency * alpha.duration, beta.efficiency * beta.duration};
}

UtilityPair availability_efficiency_utilities(const VaccineProfile& alpha,
                                              const VaccineProfile& beta,
                                              const DiscountSpec& discount) {
  alpha.validate();
  beta.validate();
  const double log_d = discount.log_delta();
  auto utility = [&](const VaccineProfile& v) {
    return (-v.efficiency / log_d) * std::pow(discount.delta, v.available_from);
  };
  return {utility(alpha), utility(beta)};
}

UtilityPair duration_efficiency_availability_utilities(const VaccineProfile& alpha,
                                                       const VaccineProfile& beta,
                                                       const DiscountSpec& discount) {
  alpha.validate();
  beta.validate();
  const double log_d = discount.log_delta();
  auto utility = [&](const VaccineProfile& v) {
    return (std::pow(discount.delta, v.duration) - 1.0) *
           std::pow(discount.delta, v.available_from) * v.efficiency / log_d;
  };
  return {utility(alpha), utility(beta)};
}

UtilityPair side_effect_utilities(const VaccineProfile& alpha,
                                  const VaccineProfile& beta) {
  alpha.validate();
  beta.validate();
  auto utility = [](const VaccineProfile& v) {
    return v.benefit - (1.0 - v.efficiency) * v.infection_cost -
           v.side_effect_prob * v.side_effect_cost;
  };
  return {utility(alpha), utility(beta)};
}

UtilityPair duration_efficiency_utilities_by_quadrature(const VaccineProfile& alpha,
                                                        const VaccineProfile& beta) {
  alpha.validate();
  beta.validate();
  auto utility = [](const VaccineProfile& v) {
    return numeric::integrate([&](double) { return v.efficiency; }, 0.0, v.duration);
  };
  return {utility(alpha), utility(beta)};
}

UtilityPair availability_efficiency_utilities_by_quadrature(const VaccineProfile& alpha,
                                                            const VaccineProfile& beta,
                                                            double delta) {
  alpha.validate();
  beta.validate();
  DiscountSpec{delta, LogConvention::natural}.validate();
  auto utility = [&](const VaccineProfile& v) {
    return discounted_integral_to_infinity(v.efficiency, delta, v.available_from);
  };
  return {utility(alpha), utility(beta)};
}

UtilityPair duration_efficiency_availability_utilities_by_quadrature(
    const VaccineProfile& alpha, const VaccineProfile& beta, double delta) {
  alpha.validate();
  beta.validate();
  DiscountSpec{delta, LogConvention::natural}.validate();
  auto utility = [&](const VaccineProfile& v) {
    return discounted_integral(v.efficiency, delta, v.available_from,
                               v.available_from + v.duration);
  };
  return {utility(alpha), utility(beta)};
}

VaccineChoice choose_vaccine(const UtilityPair& utilities, double tie_tol) {
  if (!std::isfinite(utilities.alpha) || !std::isfinite(utilities.beta)) {
    throw std::invalid_argument("utilities must be finite");
  }
  if (std::abs(utilities.alpha - utilities.beta) <= tie_tol) return VaccineChoice::tie;
  return utilities.alpha > utilities.beta ? VaccineChoice::alpha : VaccineChoice::beta;
}

void AvailabilityParams::validate() const {
  if (n_players < 1) throw std::invalid_argument("n_players must be at least 1");
  if (t0 < 0.0) throw std::invalid_argument("t0 must be nonnegative");
  if (infection_cost < 0.0)
    throw std::invalid_argument("infection_cost must be nonnegative");
  discount.validate();
}

PreferenceProfile::PreferenceProfile(std::vector<double> preferences, double t0)
    : preferences_(std::move(preferences)), t0_(t0) {
  if (preferences_.empty()) throw std::invalid_argument("profile must not be empty");
  if (t0_ < 0.0) throw std::invalid_argument("t0 must be nonnegative");
  for (double p : preferences_) check_unit_interval(p, "preference");
  sorted_times_.reserve(preferences_.size());
  for (double p : preferences_) sorted_times_.push_back(p * t0_);
  std::sort(sorted_times_.begin(), sorted_times_.end());
}

std::size_t PreferenceProfile::rank(std::size_t n, TieRank policy) const {
  if (n >= preferences_.size()) throw std::invalid_argument("player index out of range");
  const double own = time(n);
  if (policy == TieRank::last) {
    return static_cast<std::size_t>(
        std::upper_bound(sorted_times_.begin(), sorted_times_.end(), own) -
        sorted_times_.begin());
  }
  return static_cast<std::size_t>(std::lower_bound(sorted_times_.begin(),
                                                   sorted_times_.end(), own) -
                                  sorted_times_.begin()) +
         1;
}

namespace {

void check_profile(const AvailabilityParams& params, const PreferenceProfile& profile) {
  params.validate();
  if (static_cast<std::size_t>(params.n_players) != profile.size()) {
    throw std::invalid_argument("profile size must equal n_players");
  }
  if (profile.t0() != params.t0) {
    throw std::invalid_argument("profile and parameters disagree on t0");
  }
}

double mixed_benefit_rate(const AvailabilityParams& params, double p) {
  return p * params.benefit_beta + (1.0 - p) * params.benefit_alpha;
}

// Exposure windows summed exactly: C_i/N * sum (N-i)(d^t_i - d^t_{i+1}) with
// t_0 = 0, divided by -log d. The windows partition [0, t-hat_rank].
double telescoped_exposure(const AvailabilityParams& params,
                           const PreferenceProfile& profile, std::size_t rank,
                           double log_d) {
  const double n = params.n_players;
  double previous = 1.0;  // d^0
  double sum = 0.0;
  for (std::size_t i = 0; i < rank; ++i) {
    const double next = std::pow(params.discount.delta, profile.sorted_times()[i]);
    sum += (n - static_cast<double>(i)) * (previous - next);
    previous = next;
  }
  return params.infection_cost * sum / (n * (-log_d));
}

}  // namespace

double availability_utility_direct(const AvailabilityParams& params,
                                   const PreferenceProfile& profile, std::size_t n,
                                   TieRank policy) {
  check_profile(params, profile);
  const double p = profile.preference(n);
  const double benefit = discounted_integral_to_infinity(
      mixed_benefit_rate(params, p), params.discount.delta, profile.time(n), 10.0);

  const std::size_t rank = profile.rank(n, policy);
  double exposure = 0.0;
  double window_start = 0.0;
  for (std::size_t i = 0; i < rank; ++i) {
    const double window_end = profile.sorted_times()[i];
    const double weight = 1.0 - static_cast<double>(i) / params.n_players;
    exposure += discounted_integral(params.infection_cost * weight,
                                    params.discount.delta, window_start, window_end);
    window_start = window_end;
  }
  return benefit - exposure;
}

double availability_utility_closed(const AvailabilityParams& params,
                                   const PreferenceProfile& profile, std::size_t n,
                                   TieRank policy) {
  check_profile(params, profile);
  const double log_d = params.discount.log_delta();
  const double p = profile.preference(n);
  const double benefit = std::pow(params.discount.delta, profile.time(n)) *
                         mixed_benefit_rate(params, p) / (-log_d);

  const std::size_t rank = profile.rank(n, policy);
  double discounted_sum = 0.0;
  for (std::size_t j = 0; j < rank; ++j) {
    discounted_sum += std::pow(params.discount.delta, profile.sorted_times()[j]);
  }
  const double n_players = params.n_players;
  return benefit -
         params.infection_cost * (n_players - discounted_sum) / (n_players * log_d);
}

double availability_utility_telescoped(const AvailabilityParams& params,
                                       const PreferenceProfile& profile, std::size_t n,
                                       TieRank policy) {
  check_profile(params, profile);
  const double log_d = params.discount.log_delta();
  const double p = profile.preference(n);
  const double benefit = std::pow(params.discount.delta, profile.time(n)) *
                         mixed_benefit_rate(params, p) / (-log_d);
  return benefit - telescoped_exposure(params, profile, profile.rank(n, policy), log_d);
}

double symmetric_utility(const AvailabilityParams& params, double p) {
  params.validate();
  check_unit_interval(p, "p");
  const double log_d = params.discount.log_delta();
  const double discounted = std::pow(params.discount.delta, p * params.t0);
  const double n = params.n_players;
  return discounted * mixed_benefit_rate(params, p) / (-log_d) -
         params.infection_cost * (n - discounted) / (n * log_d);
}

double symmetric_utility_cost_subtracted(const AvailabilityParams& params, double p) {
  params.validate();
  check_unit_interval(p, "p");
  const double log_d = params.discount.log_delta();
  const double discounted = std::pow(params.discount.delta, p * params.t0);
  const double n = params.n_players;
  return discounted * mixed_benefit_rate(params, p) / (-log_d) -
         params.infection_cost * (n - discounted) / (n * (-log_d));
}

double symmetric_utility_integral(const AvailabilityParams& params, double p) {
  params.validate();
  check_unit_interval(p, "p");
  // Identical vaccination times collapse the exposure to the single fully
  // weighted window [0, p t0]. True integral value, so the natural logarithm
  // regardless of the convention tag.
  const double log_d = std::log(params.discount.delta);
  const double discounted = std::pow(params.discount.delta, p * params.t0);
  return discounted * mixed_benefit_rate(params, p) / (-log_d) -
         params.infection_cost * (1.0 - discounted) / (-log_d);
}

SymmetricEquilibrium symmetric_equilibrium(const AvailabilityParams& params) {
  params.validate();
  if (params.benefit_alpha == params.benefit_beta) {
    throw std::invalid_argument(
        "the stationary point is undefined for equal benefits");
  }

  SymmetricEquilibrium out;
  if (params.t0 == 0.0) {
    out.kind = SymmetricEquilibrium::Kind::degenerate;
    return out;
  }

  const double log_d = params.discount.log_delta();
  const double n = params.n_players;
  const double p_star =
      (params.infection_cost + params.benefit_alpha * n) /
          ((-params.benefit_beta + params.benefit_alpha) * n) -
      1.0 / (params.t0 * log_d);
  out.p_star = p_star;

  if (p_star > 0.0 && p_star < 1.0) {
    out.kind = SymmetricEquilibrium::Kind::interior;
    out.p = p_star;
    return out;
  }

  const double dt0 = std::pow(params.discount.delta, params.t0);
  const double late_gain = params.benefit_beta * dt0 - params.benefit_alpha;
  const double exposure_saved = params.infection_cost / n * (1.0 - dt0);
  if (late_gain == exposure_saved) {
    out.tie = true;
    out.kind = SymmetricEquilibrium::Kind::everyone_alpha;
    out.p = 0.0;
  } else if (late_gain < exposure_saved) {
    out.kind = SymmetricEquilibrium::Kind::everyone_alpha;
    out.p = 0.0;
  } else {
    out.kind = SymmetricEquilibrium::Kind::everyone_beta;
    out.p = 1.0;
  }
  return out;
}

numeric::Argmax symmetric_argmax_numeric(const AvailabilityParams& params,
                                         int grid_points) {
  params.validate();
  return numeric::maximize_on_unit_interval(
      [&](double p) { return symmetric_utility(params, p); }, grid_points);
}

numeric::Argmax symmetric_argmax_integral(const AvailabilityParams& params,
                                          int grid_points) {
  params.validate();
  return numeric::maximize_on_unit_interval(
      [&](double p) { return symmetric_utility_integral(params, p); }, grid_points);
}

numeric::Argmax symmetric_argmax_cost_subtracted(const AvailabilityParams& params,
                                                 int grid_points) {
  params.validate();
  return numeric::maximize_on_unit_interval(
      [&](double p) { return symmetric_utility_cost_subtracted(params, p); },
      grid_points);
}

double telescoping_identity_residual(const AvailabilityParams& params,
                                     const PreferenceProfile& profile, std::size_t n,
                                     TieRank policy) {
  check_profile(params, profile);
  const std::size_t rank = profile.rank(n, policy);
  const double n_players = params.n_players;

  double lhs = 0.0;
  double previous = 1.0;
  for (std::size_t i = 0; i < rank; ++i) {
    const double next = std::pow(params.discount.delta, profile.sorted_times()[i]);
    lhs += (n_players - static_cast<double>(i)) * (previous - next);
    previous = next;
  }

  double rhs = n_players;
  for (std::size_t j = 0; j + 1 < rank; ++j) {
    rhs -= std::pow(params.discount.delta, profile.sorted_times()[j]);
  }
  if (rank >= 1) {
    rhs -= (n_players - static_cast<double>(rank) + 1.0) *
           std::pow(params.discount.delta, profile.sorted_times()[rank - 1]);
  }
  return lhs - rhs;
}

Lemma7Report verify_lemma7(const AvailabilityParams& params,
                           const PreferenceProfile& profile, double tolerance,
                           TieRank policy) {
  check_profile(params, profile);

  Lemma7Report report;
  report.tolerance = tolerance;
  report.policy = policy;
  for (std::size_t n = 0; n < profile.size(); ++n) {
    Lemma7PlayerRecord record;
    record.player = n;
    record.preference = profile.preference(n);
    record.rank = profile.rank(n, policy);
    record.direct = availability_utility_direct(params, profile, n, policy);
    record.closed = availability_utility_closed(params, profile, n, policy);
    record.telescoped = availability_utility_telescoped(params, profile, n, policy);
    record.gap_closed = record.direct - record.closed;
    record.gap_telescoped = record.direct - record.telescoped;
    report.max_abs_gap_closed =
        std::max(report.max_abs_gap_closed, std::abs(record.gap_closed));
    report.max_abs_gap_telescoped =
        std::max(report.max_abs_gap_telescoped, std::abs(record.gap_telescoped));
    report.telescoping_residual =
        std::max(report.telescoping_residual,
                 std::abs(telescoping_identity_residual(params, profile, n, policy)));
    report.players.push_back(record);
  }
  report.closed_within_tolerance = report.max_abs_gap_closed <= tolerance;
  report.telescoped_within_tolerance = report.max_abs_gap_telescoped <= tolerance;
  return report;
}

}  // namespace epigame
