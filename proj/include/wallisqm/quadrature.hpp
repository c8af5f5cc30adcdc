#pragma once

#include <cstdint>
#include <functional>

namespace wallisqm {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;       // converged when |delta| <= max(abs_tol, rel_tol |I|)
  double length_scale = 1.0;  // x = L t / (1 - t)
  int min_level = 3;
  int max_level = 15;  // 2^level panels on [0, 1)
};

/// Integral of f over [0, inf).
///
/// The half line is mapped onto [0, 1) by x = L t/(1-t) and the image is
/// integrated with composite 20-point Gauss-Legendre on 2^level equal
/// panels, doubling the panel count until two successive levels agree.
/// The reported error estimate is that last difference. Throws
/// ConvergenceError (carrying the best estimate) when max_level is
/// reached first.
QuadratureResult quad_semiinfinite(const std::function<double(double)>& f, const QuadratureOptions& options);

/// Absolute-tolerance form; tol must be >= 1e-12.
QuadratureResult quad_semiinfinite(const std::function<double(double)>& f, double tol);

}  // namespace wallisqm
