#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epigame/numeric.hpp"

namespace epigame {

/// Logarithm used by the discounting closed forms. The defining integrals
/// have the natural logarithm in their antiderivative, which is the default;
/// base10 reproduces an alternative reading of the same formulas and rescales
/// every utility by the constant ln(10), so no choice or argmax depends on it.
enum class LogConvention { natural, base10 };

struct DiscountSpec {
  double delta = 0.999;
  LogConvention convention = LogConvention::natural;

  void validate() const;    // requires 0 < delta < 1
  double log_delta() const; // negative; per the convention tag
};

/// One vaccine's characteristics for the individual decision problems.
struct VaccineProfile {
  double efficiency = 0.0;        // protection level in [0, 1]
  double duration = 0.0;          // length of the protection window
  double available_from = 0.0;    // first time it can be taken
  double side_effect_prob = 0.0;  // in [0, 1]
  double benefit = 0.0;           // money value of being vaccinated with it
  double side_effect_cost = 0.0;  // money
  double infection_cost = 0.0;    // money

  void validate() const;
};

struct UtilityPair {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Protection integrated over the effect window: efficiency * duration.
UtilityPair duration_efficiency_utilities(const VaccineProfile& alpha,
                                          const VaccineProfile& beta);

/// Discounted protection from availability onward, open-ended.
UtilityPair availability_efficiency_utilities(const VaccineProfile& alpha,
                                              const VaccineProfile& beta,
                                              const DiscountSpec& discount);

/// Discounted protection over the effect window starting at availability.
UtilityPair duration_efficiency_availability_utilities(const VaccineProfile& alpha,
                                                       const VaccineProfile& beta,
                                                       const DiscountSpec& discount);

/// Benefit net of residual infection risk and expected side-effect cost.
UtilityPair side_effect_utilities(const VaccineProfile& alpha,
                                  const VaccineProfile& beta);

// Quadrature versions of the three integral-defined utilities above. They
// evaluate the defining integrals numerically (plus an exact tail for the
// open-ended one) and do not depend on the log convention; they match the
// closed forms under the natural convention.
UtilityPair duration_efficiency_utilities_by_quadrature(const VaccineProfile& alpha,
                                                        const VaccineProfile& beta);
UtilityPair availability_efficiency_utilities_by_quadrature(
    const VaccineProfile& alpha, const VaccineProfile& beta, double delta);
UtilityPair duration_efficiency_availability_utilities_by_quadrature(
    const VaccineProfile& alpha, const VaccineProfile& beta, double delta);

enum class VaccineChoice { alpha, beta, tie };

VaccineChoice choose_vaccine(const UtilityPair& utilities, double tie_tol = 0.0);

/// N-player game where each player picks a preference p in [0, 1] between an
/// immediately available vaccine (p = 0) and a better one available from t0
/// (p = 1), vaccinating at time p * t0 under a shared infection cost.
struct AvailabilityParams {
  int n_players = 1;
  double benefit_alpha = 0.0;
  double benefit_beta = 0.0;
  double infection_cost = 0.0;
  double t0 = 0.0;
  DiscountSpec discount;

  void validate() const;
};

/// Rank convention for players vaccinating at exactly the same time.
enum class TieRank { last, first };

/// Preference vector with the derived vaccination times t_n = p_n * t0 and
/// their ascending order.
class PreferenceProfile {
 public:
  PreferenceProfile(std::vector<double> preferences, double t0);

  std::size_t size() const { return preferences_.size(); }
  double preference(std::size_t n) const { return preferences_.at(n); }
  double time(std::size_t n) const { return preferences_.at(n) * t0_; }
  double t0() const { return t0_; }

  /// Vaccination times sorted ascending (the ordered t-hat values, 1-based
  /// conceptually; index j-1 holds t-hat_j).
  const std::vector<double>& sorted_times() const { return sorted_times_; }

  /// Player n's position in the sorted order, in 1..N.
  std::size_t rank(std::size_t n, TieRank policy) const;

 private:
  std::vector<double> preferences_;
  double t0_;
  std::vector<double> sorted_times_;
};

/// Utility of player n evaluated from the defining integrals: discounted
/// quadrature of the benefit from the player's vaccination time (exact tail
/// added analytically) minus the discounted exposure windows before it.
/// This is the ground-truth semantics; it does not depend on the log
/// convention.
double availability_utility_direct(const AvailabilityParams& params,
                                   const PreferenceProfile& profile, std::size_t n,
                                   TieRank policy = TieRank::last);

/// The closed form exactly as printed:
///   d^(p_n t0) (p_n B_beta + (1-p_n) B_alpha) / (-log d)
///     - C_i (N - d^t1 - ... - d^tn') / (N log d).
double availability_utility_closed(const AvailabilityParams& params,
                                   const PreferenceProfile& profile, std::size_t n,
                                   TieRank policy = TieRank::last);

/// Exact telescoping of the exposure-window sum; agrees with the direct
/// integral under the natural convention for every profile.
double availability_utility_telescoped(const AvailabilityParams& params,
                                       const PreferenceProfile& profile, std::size_t n,
                                       TieRank policy = TieRank::last);

/// Symmetric-play utility curve as printed:
///   d^(p t0) (p B_beta + (1-p) B_alpha) / (-log d) - C_i (N - d^(p t0)) / (N log d).
double symmetric_utility(const AvailabilityParams& params, double p);

/// Same curve with the exposure term subtracted as a cost magnitude instead
/// of carrying the printed sign.
double symmetric_utility_cost_subtracted(const AvailabilityParams& params, double p);

/// Symmetric-play utility derived from the defining integrals (every player
/// at the same p collapses the exposure to the single window [0, p t0]).
double symmetric_utility_integral(const AvailabilityParams& params, double p);

struct SymmetricEquilibrium {
  enum class Kind {
    interior,        // the closed-form stationary point lies in (0, 1)
    everyone_alpha,  // p = 0
    everyone_beta,   // p = 1
    degenerate,      // t0 = 0: both vaccines available at once
  };
  Kind kind = Kind::degenerate;
  std::optional<double> p_star;  // closed-form stationary point, when computable
  double p = 0.0;                // resolved equilibrium preference
  bool tie = false;              // the boundary comparison held with equality
};

/// Closed-form symmetric equilibrium: the printed stationary point when it is
/// interior, otherwise the boundary selected by comparing
/// B_beta d^t0 - B_alpha against (C_i/N)(1 - d^t0).
/// Requires benefit_alpha != benefit_beta.
SymmetricEquilibrium symmetric_equilibrium(const AvailabilityParams& params);

/// Grid scan plus golden-section argmax of the printed symmetric curve.
numeric::Argmax symmetric_argmax_numeric(const AvailabilityParams& params,
                                         int grid_points = 2048);

/// Same maximization applied to the integral-derived symmetric curve.
numeric::Argmax symmetric_argmax_integral(const AvailabilityParams& params,
                                          int grid_points = 2048);

/// Same maximization applied to the cost-subtracted symmetric curve.
numeric::Argmax symmetric_argmax_cost_subtracted(const AvailabilityParams& params,
                                                 int grid_points = 2048);

struct Lemma7PlayerRecord {
  std::size_t player = 0;
  double preference = 0.0;
  std::size_t rank = 0;
  double direct = 0.0;
  double closed = 0.0;
  double telescoped = 0.0;
  double gap_closed = 0.0;      // direct - closed
  double gap_telescoped = 0.0;  // direct - telescoped
};

/// Comparison of the integral semantics against both closed forms, plus the
/// algebraic telescoping-identity residual. Gaps are reported verbatim and
/// never suppressed; the pass flags only apply the given tolerance.
struct Lemma7Report {
  std::vector<Lemma7PlayerRecord> players;
  double max_abs_gap_closed = 0.0;
  double max_abs_gap_telescoped = 0.0;
  double telescoping_residual = 0.0;
  double tolerance = 0.0;
  TieRank policy = TieRank::last;
  bool closed_within_tolerance = false;
  bool telescoped_within_tolerance = false;
};

Lemma7Report verify_lemma7(const AvailabilityParams& params,
                           const PreferenceProfile& profile, double tolerance,
                           TieRank policy = TieRank::last);

/// Residual of the telescoping identity
///   sum_{i=0}^{k-1} (N-i)(d^t_i - d^t_{i+1})
///     = N - sum_{j=1}^{k-1} d^t_j - (N-k+1) d^t_k
/// for the sorted times of the profile at the given player's rank.
double telescoping_identity_residual(const AvailabilityParams& params,
                                     const PreferenceProfile& profile, std::size_t n,
                                     TieRank policy = TieRank::last);

}  // namespace epigame
