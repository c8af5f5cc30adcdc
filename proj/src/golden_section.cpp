#include <wallisqm/golden_section.hpp>

#include <wallisqm/errors.hpp>

#include <cmath>

namespace wallisqm {

MinimizeResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                       double width_tol, int max_iterations) {
  if (!(lo < hi)) throw DomainError("golden_section_minimize: empty bracket");
  if (!(width_tol > 0.0)) throw DomainError("golden_section_minimize: width tolerance must be positive");

  // 1/phi and 1/phi^2
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double inv_phi2 = 1.0 - inv_phi;

  double a = lo;
  double b = hi;
  double c = a + inv_phi2 * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);

  MinimizeResult result;
  while (b - a > width_tol && result.iterations < max_iterations) {
    ++result.iterations;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = a + inv_phi2 * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc < fd) {
    result.argmin = c;
    result.value = fc;
  } else {
    result.argmin = d;
    result.value = fd;
  }
  return result;
}

}  // namespace wallisqm
