#include "epigame/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epigame::numeric {

namespace {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], via
// Newton iteration on the Legendre recurrence.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendreRule(int n) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

const GaussLegendreRule& rule24() {
  static const GaussLegendreRule rule(24);
  return rule;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 int segments) {
  if (segments < 1) segments = 1;
  if (a == b) return 0.0;
  const GaussLegendreRule& rule = rule24();
  const double h = (b - a) / segments;
  double total = 0.0;
  for (int s = 0; s < segments; ++s) {
    const double lo = a + s * h;
    const double mid = lo + h / 2.0;
    const double half = h / 2.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total += acc * half;
  }
  return total;
}

int segments_for_rate(double rate, double a, double b) {
  const double span = std::abs(rate) * std::abs(b - a);
  const int n = static_cast<int>(std::ceil(span)) + 1;
  return std::clamp(n, 1, 4096);
}

Argmax maximize_on_unit_interval(const std::function<double(double)>& f,
                                 int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");

  std::size_t best = 0;
  double best_value = f(0.0);
  const int last = grid_points - 1;
  std::vector<double> xs(grid_points);
  for (int i = 0; i <= last; ++i) {
    xs[i] = static_cast<double>(i) / last;
  }
  xs[last] = 1.0;
  for (int i = 1; i <= last; ++i) {
    const double v = f(xs[i]);
    if (v > best_value) {  // lowest index wins ties
      best_value = v;
      best = i;
    }
  }

  // Golden-section refinement on the window around the best grid point.
  double lo = xs[best > 0 ? best - 1 : 0];
  double hi = xs[best + 1 <= static_cast<std::size_t>(last) ? best + 1 : last];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double x = (lo + hi) / 2.0;
  const double fx = f(x);
  // Keep the grid optimum if refinement did not improve on it.
  if (fx >= best_value) return {x, fx};
  return {xs[best], best_value};
}

BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       int scan_points) {
  if (!(lo < hi)) throw std::invalid_argument("bisection bracket requires lo < hi");
  if (scan_points < 2) scan_points = 2;

  BisectionResult result;

  // Pre-scan: sign changes and monotonicity of the discriminant.
  std::vector<double> values(scan_points);
  for (int i = 0; i < scan_points; ++i) {
    const double t = lo + (hi - lo) * i / (scan_points - 1);
    values[i] = f(t);
  }
  int previous_sign = sign_of(values[0]);
  bool increasing = true, decreasing = true;
  for (int i = 1; i < scan_points; ++i) {
    const int s = sign_of(values[i]);
    if (s != 0 && previous_sign != 0 && s != previous_sign) ++result.scan_sign_changes;
    if (s != 0) previous_sign = s;
    if (values[i] < values[i - 1]) increasing = false;
    if (values[i] > values[i - 1]) decreasing = false;
  }
  result.monotone_scan = increasing || decreasing;

  double f_lo = values.front();
  double f_hi = values.back();
  if (sign_of(f_lo) == 0) {
    result.root = lo;
    result.residual = f_lo;
    return result;
  }
  if (sign_of(f_hi) == 0) {
    result.root = hi;
    result.residual = f_hi;
    return result;
  }
  if (sign_of(f_lo) == sign_of(f_hi)) {
    return result;  // no bracketed root
  }

  double a = lo, b = hi;
  double fa = f_lo;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = a + (b - a) / 2.0;
    const double fm = f(mid);
    if (sign_of(fm) == 0 || (b - a) / 2.0 < 1e-15 * std::max(1.0, std::abs(mid))) {
      result.root = mid;
      result.residual = fm;
      return result;
    }
    if (sign_of(fa) == sign_of(fm)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  const double mid = a + (b - a) / 2.0;
  result.root = mid;
  result.residual = f(mid);
  return result;
}

double polyval(const std::vector<double>& coefficients, double x) {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

}  // namespace epigame::numeric
