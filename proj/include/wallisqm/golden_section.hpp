#pragma once

#include <functional>

namespace wallisqm {

struct MinimizeResult {
  double argmin = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Stops once the bracket is narrower than width_tol (absolute) or after
/// max_iterations; the returned argmin is the best interior point seen.
MinimizeResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                       double width_tol, int max_iterations = 500);

}  // namespace wallisqm
