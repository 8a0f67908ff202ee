#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace epigame::numeric {

/// Composite Gauss-Legendre integration of f over [a, b] with the given
/// number of equal segments (24 nodes per segment). Deterministic.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int segments = 1);

/// Segment count so that an integrand varying like exp(rate * t) is resolved
/// with about one e-folding per segment.
int segments_for_rate(double rate, double a, double b);

/// Result of a grid-plus-golden-section maximization.
struct Argmax {
  double x = 0.0;
  double value = 0.0;
};

/// Maximizes f on [0, 1]: scan of `grid_points` equally spaced points
/// (lowest index wins ties), then golden-section refinement around the best
/// grid point. Deterministic.
Argmax maximize_on_unit_interval(const std::function<double(double)>& f,
                                 int grid_points = 2048);

struct BisectionResult {
  std::optional<double> root;  // nullopt when the bracket ends share a sign
  double residual = 0.0;       // f at the returned root
  int scan_sign_changes = 0;   // sign changes seen on the pre-scan
  bool monotone_scan = true;   // f monotone over the pre-scan points
};

/// Bisection on [lo, hi] preceded by a fixed `scan_points`-point scan that
/// counts sign changes and checks monotonicity. Returns no root when f has
/// the same sign at both bracket ends.
BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       int scan_points = 64);

/// Evaluates a polynomial given by ascending coefficients (Horner).
double polyval(const std::vector<double>& coefficients, double x);

}  // namespace epigame::numeric
