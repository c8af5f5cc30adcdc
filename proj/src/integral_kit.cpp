#include <wallisqm/integral_kit.hpp>

#include <wallisqm/errors.hpp>
#include <wallisqm/gamma_kit.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace wallisqm {
namespace {

void require_nonnegative(std::int64_t l, const char* what) {
  if (l < 0) throw DomainError(std::string(what) + ": l must be nonnegative");
}

// (2l+1)! stays finite up to 2l+1 = 170.
constexpr std::int64_t kExactFactorialLimit = 84;

}  // namespace

double gaussian_moment(int m) {
  if (m < 0) throw DomainError("gaussian_moment: m must be nonnegative");
  return static_cast<double>(0.5L * std::exp(log_gamma_long(0.5L * (m + 1))));
}

double rational_moment(const RationalMomentQuery& q) {
  if (!(q.m > -1.0)) throw DomainError("rational_moment: diverges at 0 unless m > -1");
  if (!(2.0 * q.n - q.m > 1.0)) throw DomainError("rational_moment: diverges at infinity unless 2n - m > 1");
  const long double p = 0.5L * (static_cast<long double>(q.m) + 1.0L);
  const long double n = q.n;
  return static_cast<double>(0.5L * std::exp(log_gamma_long(p) + log_gamma_long(n - p) - log_gamma_long(n)));
}

double beta_trig_integral(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0)) throw DomainError("beta_trig_integral: p and q must be positive");
  const long double pp = p;
  const long double qq = q;
  return static_cast<double>(0.5L * std::exp(log_gamma_long(pp) + log_gamma_long(qq) - log_gamma_long(pp + qq)));
}

double g_rational(std::int64_t l) {
  require_nonnegative(l, "g_rational");
  double g = std::numbers::pi / 2.0;
  for (std::int64_t j = 1; j <= l; ++j) g *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
  return g;
}

double lorentz_norm_integral(std::int64_t l) {
  require_nonnegative(l, "lorentz_norm_integral");
  return std::ldexp(std::numbers::pi * wallis_ratio(l), static_cast<int>(-(2 * l + 2)));
}

double lorentz_coulomb_integral(std::int64_t l) {
  require_nonnegative(l, "lorentz_coulomb_integral");
  if (l <= kExactFactorialLimit) {
    // (l!)^2/(2l+1)! = prod_{j=1..l} j/(l+j) / (2l+1)
    double ratio = 1.0 / static_cast<double>(2 * l + 1);
    for (std::int64_t j = 1; j <= l; ++j) ratio *= static_cast<double>(j) / static_cast<double>(l + j);
    return 0.5 * ratio;
  }
  const long double ll = static_cast<long double>(l);
  return static_cast<double>(0.5L * std::exp(2.0L * log_gamma_long(ll + 1.0L) - log_gamma_long(2.0L * ll + 2.0L)));
}

double lorentz_coulomb_integral_gamma_form(std::int64_t l) {
  require_nonnegative(l, "lorentz_coulomb_integral_gamma_form");
  const double ll = static_cast<double>(l);
  const double ratio = gamma_ratio({ll, 1.0, 1.5});
  return std::ldexp(std::sqrt(std::numbers::pi) * ratio, static_cast<int>(-(2 * l + 2)));
}

double coulomb_to_norm_ratio(std::int64_t l) {
  require_nonnegative(l, "coulomb_to_norm_ratio");
  const double w = wallis_ratio(l);
  return 1.0 / ((static_cast<double>(l) + 0.5) * std::numbers::pi * w * w);
}

}  // namespace wallisqm
