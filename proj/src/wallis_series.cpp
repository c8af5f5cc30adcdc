#include <wallisqm/wallis_series.hpp>

#include <wallisqm/errors.hpp>
#include <wallisqm/gamma_kit.hpp>
#include <wallisqm/parallel.hpp>
#include <wallisqm/summation.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wallisqm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

// ln of the j-th Wallis factor 4j^2/(4j^2-1) = 1 + 1/((2j-1)(2j+1)).
double log_wallis_factor(std::int64_t j) {
  const double odd_product = static_cast<double>(2 * j - 1) * static_cast<double>(2 * j + 1);
  return std::log1p(1.0 / odd_product);
}

// Rounding slack added to exact-remainder tail bounds so that the
// |limit - value| <= tail_bound invariant survives the last few ulps.
double rounding_slack(double limit, double value) {
  return 16.0 * kEps * (std::abs(limit) + std::abs(value));
}

double telescope_coefficient(const GeneralizedParams& p) { return 4.0 / (2.0 * (p.k - p.m) + 1.0); }

}  // namespace

void validate(const GeneralizedParams& p) {
  if (!std::isfinite(p.m) || !std::isfinite(p.k)) throw DomainError("generalized series: m and k must be finite");
  if (!(p.m > -1.0)) throw DomainError("generalized series: requires m > -1 (got m = " + std::to_string(p.m) + ")");
  if (!(p.k > -1.0)) throw DomainError("generalized series: requires k > -1 (got k = " + std::to_string(p.k) + ")");
  if (2.0 * (p.k - p.m) + 1.0 == 0.0)
    throw DomainError("generalized series: requires 2(k-m)+1 != 0 (k - m = -1/2 is a pole of the closed form)");
}

double wallis_partial_product(std::int64_t n) {
  require_positive(n, "wallis_partial_product");
  return std::exp(kernels::compensated_sum(1, n, log_wallis_factor));
}

std::vector<double> wallis_partial_products(std::int64_t n_max) {
  require_positive(n_max, "wallis_partial_products");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  CompensatedSum<double> log_product;
  for (std::int64_t j = 1; j <= n_max; ++j) {
    log_product += log_wallis_factor(j);
    out.push_back(std::exp(log_product.value()));
  }
  return out;
}

double a_seq(std::int64_t n) {
  require_positive(n, "a_seq");
  const double nn = static_cast<double>(n);
  const double log_ratio = log_gamma_ratio({nn, 0.0, 0.5});  // ln Gamma(n)/Gamma(n+1/2)
  return std::exp(2.0 * log_ratio) / (nn + 0.5);
}

double scaled_a(std::int64_t n) {
  require_positive(n, "scaled_a");
  const double nn = static_cast<double>(n);
  const double log_ratio = log_gamma_ratio({nn, 1.0, 0.5});  // ln Gamma(n+1)/Gamma(n+1/2)
  return std::exp(2.0 * log_ratio) / (nn + 0.5);
}

namespace detail {

PartialSum sum_a_recurrence_with_coefficient(std::int64_t n, double a1_coefficient) {
  require_positive(n, "sum_a_recurrence");
  const double a1 = a_seq(1);
  const double scaled = scaled_a(n);
  PartialSum out;
  out.n_terms = n;
  out.value = 4.0 * scaled - a1_coefficient * a1;
  out.closed_form_limit = 4.0 - 8.0 / std::numbers::pi;
  out.tail_bound = 4.0 * (1.0 - scaled) + rounding_slack(*out.closed_form_limit, out.value);
  return out;
}

}  // namespace detail

PartialSum sum_a_recurrence(std::int64_t n) { return detail::sum_a_recurrence_with_coefficient(n, 3.0); }

double sum_a_direct(std::int64_t n) {
  require_positive(n, "sum_a_direct");
  return kernels::compensated_sum(1, n, [](std::int64_t i) { return a_seq(i); });
}

double sum_a_direct_serial(std::int64_t n) {
  require_positive(n, "sum_a_direct");
  return kernels::compensated_sum_serial(1, n, [](std::int64_t i) { return a_seq(i); });
}

double b_seq(const GeneralizedParams& p, std::int64_t n) {
  validate(p);
  require_positive(n, "b_seq");
  const double nn = static_cast<double>(n);
  const double log_b = log_gamma_ratio({nn, p.m, p.m + 0.5}) + log_gamma_ratio({nn, p.k, p.k + 1.5});
  return std::exp(log_b);
}

PartialSum sum_b_partial(const GeneralizedParams& p, std::int64_t n) {
  validate(p);
  require_positive(n, "sum_b_partial");
  const double c = telescope_coefficient(p);
  const double nn = static_cast<double>(n);
  const double b1 = b_seq(p, 1);
  const double bn = b_seq(p, n);
  const double scaled_bn = (nn + p.m) * (nn + p.k) * bn;

  PartialSum out;
  out.n_terms = n;
  out.value = c * scaled_bn - (4.0 * (p.m + 1.0) * (p.k + 1.0) / (2.0 * (p.k - p.m) + 1.0) - 1.0) * b1;
  out.closed_form_limit = sum_b_closed(p);
  out.tail_bound = std::abs(c * (1.0 - scaled_bn)) + rounding_slack(*out.closed_form_limit, out.value);
  return out;
}

double sum_b_direct(const GeneralizedParams& p, std::int64_t n) {
  validate(p);
  require_positive(n, "sum_b_direct");
  return kernels::compensated_sum(1, n, [&p](std::int64_t i) { return b_seq(p, i); });
}

double sum_b_direct_serial(const GeneralizedParams& p, std::int64_t n) {
  validate(p);
  require_positive(n, "sum_b_direct");
  return kernels::compensated_sum_serial(1, n, [&p](std::int64_t i) { return b_seq(p, i); });
}

double sum_b_closed(const GeneralizedParams& p) {
  validate(p);
  // Gamma(k+1)/Gamma(k+3/2) is pole-free for k > -1. Gamma(m+1)/Gamma(m+1/2)
  // is not for m <= -1/2; there it is rewritten as (m+1/2) Gamma(m+1)/Gamma(m+3/2).
  const double k_ratio = gamma_ratio({p.k, 1.0, 1.5});
  const double m_ratio = p.m > -0.5 ? gamma_ratio({p.m, 1.0, 0.5}) : (p.m + 0.5) * gamma_ratio({p.m, 1.0, 1.5});
  return telescope_coefficient(p) * (1.0 - m_ratio * k_ratio);
}

double direct_tail_estimate(double last_term, std::int64_t n) {
  const double nn = static_cast<double>(n);
  return last_term * nn;
}

}  // namespace wallisqm
