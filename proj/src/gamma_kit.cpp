#include <wallisqm/gamma_kit.hpp>

#include <wallisqm/errors.hpp>

#include "gamma_kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wallisqm {
namespace {

// lgamma() writes the global signgam; the reentrant variants do not.
double lgamma_reentrant(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

long double lgammal_reentrant(long double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgammal_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

void check_pole_free(const GammaRatioQuery& q) {
  if (!(q.x + q.a > 0.0) || !(q.x + q.b > 0.0)) {
    throw DomainError("gamma_ratio: argument at or left of a pole (x+a = " +
                      std::to_string(q.x + q.a) + ", x+b = " + std::to_string(q.x + q.b) + ")");
  }
}

long double log_gamma_ratio_ld(const GammaRatioQuery& q) {
  const long double v = static_cast<long double>(q.x) + static_cast<long double>(q.b);
  const long double d = static_cast<long double>(q.a) - static_cast<long double>(q.b);
  return detail::log_gamma_shift_difference(v, d);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  return lgamma_reentrant(x);
}

long double log_gamma_long(long double x) {
  if (!(x > 0.0L)) throw DomainError("log_gamma_long: argument must be positive");
  return lgammal_reentrant(x);
}

double log_gamma_ratio(const GammaRatioQuery& q) {
  check_pole_free(q);
  return static_cast<double>(log_gamma_ratio_ld(q));
}

double gamma_ratio(const GammaRatioQuery& q) {
  check_pole_free(q);
  return static_cast<double>(std::exp(log_gamma_ratio_ld(q)));
}

ExtReal gamma_ratio_ext(const ExtReal& x, const ExtReal& a, const ExtReal& b) {
  if (!(x + a > 0) || !(x + b > 0)) throw DomainError("gamma_ratio_ext: argument at or left of a pole");
  using std::exp;
  return exp(detail::log_gamma_shift_difference(ExtReal(x + b), ExtReal(a - b)));
}

double wallis_ratio_product(std::int64_t n) {
  if (n < 0) throw DomainError("wallis_ratio: n must be nonnegative");
  double w = 1.0;
  for (std::int64_t k = 1; k <= n; ++k) w *= static_cast<double>(2 * k - 1) / static_cast<double>(2 * k);
  return w;
}

double wallis_ratio_gamma(std::int64_t n) {
  if (n < 0) throw DomainError("wallis_ratio: n must be nonnegative");
  // W_n = Gamma(n+1/2) / (sqrt(pi) Gamma(n+1))
  const long double log_w =
      log_gamma_ratio_ld({static_cast<double>(n), 0.5, 1.0}) - 0.5L * std::log(std::numbers::pi_v<long double>);
  return static_cast<double>(std::exp(log_w));
}

double wallis_ratio(std::int64_t n) {
  return n <= kWallisProductCutover ? wallis_ratio_product(n) : wallis_ratio_gamma(n);
}

BoundsTriple<ExtReal> kazarinoff_bounds(std::int64_t n) {
  if (n < 1) throw DomainError("kazarinoff_bounds: n must be >= 1");
  using std::sqrt;
  const ExtReal nn = ExtReal(n);
  return {sqrt(nn + ExtReal(0.25)), gamma_ratio_ext(nn, ExtReal(1), ExtReal(0.5)), sqrt(nn + ExtReal(0.5))};
}

BoundsTriple<ExtReal> quartic_root_bounds(double x) {
  if (!(x > 0.0)) throw DomainError("quartic_root_bounds: x must be positive");
  using std::sqrt;
  const ExtReal xx = ExtReal(x);
  const ExtReal upper_radicand = xx * xx + xx / 2 + ExtReal(1) / 8;
  const ExtReal lower_radicand = upper_radicand - ExtReal(1) / (128 * xx);
  if (!(lower_radicand > 0)) {
    throw DomainError("quartic_root_bounds: lower radicand x^2+x/2+1/8-1/(128x) is non-positive at x = " +
                      std::to_string(x) + " (requires x > 0.0510237)");
  }
  return {sqrt(sqrt(lower_radicand)), gamma_ratio_ext(xx, ExtReal(1), ExtReal(0.5)),
          sqrt(sqrt(upper_radicand))};
}

double wendel_deviation(double x, double s) {
  if (!(x > 0.0)) throw DomainError("wendel_deviation: x must be positive");
  const GammaRatioQuery q{x, s, 0.0};
  check_pole_free(q);
  if (s == 0.0 || s == 1.0) return 0.0;
  const long double log_ratio = log_gamma_ratio_ld(q) - static_cast<long double>(s) * std::log(static_cast<long double>(x));
  return static_cast<double>(std::expm1(log_ratio));
}

double duplication_residual(std::int64_t l) {
  if (l < 0) throw DomainError("duplication_residual: l must be nonnegative");
  const long double ll = static_cast<long double>(l);
  const long double lhs = lgammal_reentrant(2 * ll + 1);
  const long double rhs = 2 * ll * std::numbers::ln2_v<long double> + lgammal_reentrant(ll + 1) +
                          lgammal_reentrant(ll + 0.5L) - 0.5L * std::log(std::numbers::pi_v<long double>);
  return static_cast<double>(std::expm1(rhs - lhs));
}

}  // namespace wallisqm
