#pragma once

// Wallis partial products and the gamma-ratio series
//   a_n = [Gamma(n)/Gamma(n+1/2)]^2 / (n+1/2)
//   b_n = Gamma(n+m) Gamma(n+k) / (Gamma(n+m+1/2) Gamma(n+k+3/2))
// with their telescoping partial sums and closed-form limits.

#include <cstdint>
#include <optional>
#include <vector>

namespace wallisqm {

struct PartialSum {
  std::int64_t n_terms = 0;
  double value = 0.0;
  std::optional<double> closed_form_limit;
  double tail_bound = 0.0;  // bounds |closed_form_limit - value| when a limit is present
};

/// Parameters (m, k) of b_n. Valid iff m > -1, k > -1 and 2(k-m)+1 != 0.
struct GeneralizedParams {
  double m = 0.0;
  double k = 0.0;
};

/// Throws DomainError naming the violated constraint.
void validate(const GeneralizedParams& p);

/// P_n = prod_{j=1..n} (2j)^2 / ((2j-1)(2j+1)).
double wallis_partial_product(std::int64_t n);

/// P_1 .. P_{n_max} in one pass.
std::vector<double> wallis_partial_products(std::int64_t n_max);

double a_seq(std::int64_t n);

/// n^2 a_n = [Gamma(n+1)/Gamma(n+1/2)]^2 / (n+1/2); lies in (0, 1) and tends to 1.
double scaled_a(std::int64_t n);

/// s_n = 4 n^2 a_n - 3 a_1, with limit 4 - 8/pi and the exact remainder
/// 4 (1 - n^2 a_n) as tail bound.
PartialSum sum_a_recurrence(std::int64_t n);

/// Term-by-term compensated sum of a_1..a_n.
double sum_a_direct(std::int64_t n);
double sum_a_direct_serial(std::int64_t n);

double b_seq(const GeneralizedParams& p, std::int64_t n);

/// Telescoped partial sum of b_1..b_n with its closed-form limit; the tail
/// bound is the exact remainder 4/(2(k-m)+1) (1 - (n+m)(n+k) b_n).
PartialSum sum_b_partial(const GeneralizedParams& p, std::int64_t n);

double sum_b_direct(const GeneralizedParams& p, std::int64_t n);
double sum_b_direct_serial(const GeneralizedParams& p, std::int64_t n);

/// 4/(2(k-m)+1) [1 - Gamma(m+1) Gamma(k+1) / (Gamma(m+1/2) Gamma(k+3/2))].
double sum_b_closed(const GeneralizedParams& p);

/// Tail estimate for a direct sum whose terms decay like C/n^2, with C
/// read off the last term: sum_{i>n} C/i^2 ~ C/n.
double direct_tail_estimate(double last_term, std::int64_t n);

namespace detail {
/// s_n = 4 n^2 a_n - c a_1 with a caller-chosen coefficient c. Only the
/// verification suite uses c != 3, to prove its cross-check can fail.
PartialSum sum_a_recurrence_with_coefficient(std::int64_t n, double a1_coefficient);
}  // namespace detail

}  // namespace wallisqm
