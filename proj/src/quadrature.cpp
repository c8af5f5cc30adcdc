#include <wallisqm/quadrature.hpp>

#include <wallisqm/errors.hpp>
#include <wallisqm/summation.hpp>

#include <array>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wallisqm {
namespace {

constexpr int kOrder = 20;

struct GaussLegendre {
  std::array<double, kOrder> nodes{};
  std::array<double, kOrder> weights{};
};

// Nodes/weights on [-1, 1] by Newton iteration on P_n.
GaussLegendre make_gauss_legendre() {
  GaussLegendre rule;
  for (int i = 0; i < kOrder; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= kOrder; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule = make_gauss_legendre();
  return rule;
}

double composite_level(const std::function<double(double)>& f, double scale, int level, std::int64_t& evaluations) {
  const auto& rule = gauss_legendre();
  const std::int64_t panels = std::int64_t{1} << level;
  const double width = 1.0 / static_cast<double>(panels);
  CompensatedSum<double> total;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * width;
    for (int i = 0; i < kOrder; ++i) {
      const double t = mid + 0.5 * width * rule.nodes[static_cast<std::size_t>(i)];
      const double one_minus = 1.0 - t;
      const double x = scale * t / one_minus;
      const double jacobian = scale / (one_minus * one_minus);
      const double fx = f(x);
      total += rule.weights[static_cast<std::size_t>(i)] * fx * jacobian;
    }
    evaluations += kOrder;
  }
  return 0.5 * width * total.value();
}

}  // namespace

QuadratureResult quad_semiinfinite(const std::function<double(double)>& f, const QuadratureOptions& options) {
  if (!(options.abs_tol > 0.0) && !(options.rel_tol > 0.0))
    throw DomainError("quad_semiinfinite: a positive tolerance is required");
  if (!(options.length_scale > 0.0)) throw DomainError("quad_semiinfinite: length scale must be positive");

  QuadratureResult result;
  double previous = composite_level(f, options.length_scale, 0, result.evaluations);
  double delta = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= options.max_level; ++level) {
    const double current = composite_level(f, options.length_scale, level, result.evaluations);
    if (!std::isfinite(current)) {
      throw ConvergenceError("quad_semiinfinite: integrand produced a non-finite value", current, delta);
    }
    delta = std::abs(current - previous);
    result.value = current;
    result.abs_error_estimate = delta;
    if (level >= options.min_level && delta <= std::max(options.abs_tol, options.rel_tol * std::abs(current)))
      return result;
    previous = current;
  }
  throw ConvergenceError("quad_semiinfinite: no convergence after " + std::to_string(options.max_level) +
                             " panel doublings (last difference " + std::to_string(delta) + ")",
                         result.value, delta);
}

QuadratureResult quad_semiinfinite(const std::function<double(double)>& f, double tol) {
  if (!(tol >= 1e-12)) throw DomainError("quad_semiinfinite: tol must be >= 1e-12");
  QuadratureOptions options;
  options.abs_tol = tol;
  return quad_semiinfinite(f, options);
}

}  // namespace wallisqm
