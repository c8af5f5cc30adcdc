#include <doctest.h>

#include <wallisqm/errors.hpp>
#include <wallisqm/wallis_series.hpp>

#include "test_util.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace wallisqm;
using wallisqm::test::rel_err;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent b_n oracle: Boost long double log-gamma.
long double oracle_b(double m, double k, std::int64_t n) {
  using boost::math::lgamma;
  const long double x = static_cast<long double>(n);
  const long double mm = m;
  const long double kk = k;
  return std::exp(lgamma(x + mm) + lgamma(x + kk) - lgamma(x + mm + 0.5L) - lgamma(x + kk + 1.5L));
}

long double oracle_b_sum(double m, double k, std::int64_t n) {
  long double s = 0.0L;
  for (std::int64_t i = 1; i <= n; ++i) s += oracle_b(m, k, i);
  return s;
}

const std::vector<double> kGrid = {-0.4, 0.0, 0.5, 1.0, 2.3};

bool excluded(double m, double k) { return std::abs((k - m) + 0.5) < 1e-12; }

}  // namespace

TEST_CASE("partial product examples") {
  CHECK(rel_err(wallis_partial_product(1), 4.0 / 3.0) < 1e-15);
  CHECK(rel_err(wallis_partial_product(2), 64.0 / 45.0) < 1e-15);
  const double p = wallis_partial_product(100000);
  CHECK(p < kPi / 2);
  CHECK(p > (kPi / 2) * (1.0 - 1.0 / (4.0 * 100000 + 2)));
  CHECK_THROWS_AS(wallis_partial_product(0), DomainError);
}

TEST_CASE("partial products: prefix agrees with single evaluations and increases") {
  const auto ps = wallis_partial_products(5000);
  REQUIRE(ps.size() == 5000);
  for (std::int64_t n : {1, 2, 3, 10, 999, 5000}) {
    CHECK(rel_err(ps[static_cast<std::size_t>(n - 1)], wallis_partial_product(n)) < 1e-13);
  }
  for (std::size_t i = 1; i < ps.size(); ++i) REQUIRE(ps[i] > ps[i - 1]);
}

TEST_CASE("a_seq examples") {
  CHECK(rel_err(a_seq(1), 8.0 / (3.0 * kPi)) < 1e-15);
  CHECK(rel_err(a_seq(2), 32.0 / (45.0 * kPi)) < 1e-15);
  CHECK(rel_err(a_seq(2) / a_seq(1), 4.0 / 15.0) < 1e-15);
  CHECK(rel_err(scaled_a(1), 8.0 / (3.0 * kPi)) < 1e-15);
  CHECK(rel_err(scaled_a(2), 128.0 / (45.0 * kPi)) < 1e-15);
  CHECK_THROWS_AS(a_seq(0), DomainError);
}

TEST_CASE("scaled_a equals (2/pi) P_n") {
  const auto ps = wallis_partial_products(10000);
  for (std::int64_t n = 1; n <= 10000; ++n) {
    REQUIRE_MESSAGE(rel_err(scaled_a(n), 2.0 / kPi * ps[static_cast<std::size_t>(n - 1)]) < 1e-13, "n = " << n);
  }
}

TEST_CASE("recurrence 4n^2 a_n = 4(n-1)^2 a_{n-1} + a_n") {
  for (std::int64_t n = 2; n <= 10000; ++n) {
    const double nn = static_cast<double>(n);
    const double lhs = 4 * nn * nn * a_seq(n);
    const double rhs = 4 * (nn - 1) * (nn - 1) * a_seq(n - 1) + a_seq(n);
    REQUIRE_MESSAGE(rel_err(lhs, rhs) < 1e-12, "n = " << n);
  }
}

TEST_CASE("sandwich 0 < 1 - scaled_a(n) < 1/(4n+2) and monotonicity") {
  double prev_scaled = 0.0;
  double prev_a = 1e300;
  for (double x = 1.0; x <= 1e6; x *= 1.1) {
    const auto n = static_cast<std::int64_t>(std::llround(x));
    const double gap = 1.0 - scaled_a(n);
    REQUIRE_MESSAGE(gap > 0.0, "n = " << n);
    REQUIRE_MESSAGE(gap < 1.0 / (4.0 * static_cast<double>(n) + 2.0), "n = " << n);
    if (scaled_a(n) != prev_scaled) {
      CHECK(scaled_a(n) > prev_scaled);
      CHECK(a_seq(n) < prev_a);
    }
    prev_scaled = scaled_a(n);
    prev_a = a_seq(n);
  }
}

TEST_CASE("sum_a examples") {
  const auto s1 = sum_a_recurrence(1);
  CHECK(rel_err(s1.value, 8.0 / (3.0 * kPi)) < 1e-15);
  const auto s2 = sum_a_recurrence(2);
  CHECK(rel_err(s2.value, 152.0 / (45.0 * kPi)) < 1e-15);
  REQUIRE(s2.closed_form_limit.has_value());
  CHECK(rel_err(*s2.closed_form_limit, 4.0 - 8.0 / kPi) < 1e-15);
  CHECK(rel_err(sum_a_direct(1), 8.0 / (3.0 * kPi)) < 1e-15);
  CHECK(rel_err(sum_a_direct(2), 152.0 / (45.0 * kPi)) < 1e-15);
}

TEST_CASE("sum_a: telescoped and direct agree; tail bound holds") {
  for (std::int64_t n : {1, 5, 10, 100, 1000, 4096, 4097, 10000}) {
    const auto s = sum_a_recurrence(n);
    CHECK_MESSAGE(rel_err(s.value, sum_a_direct(n)) < 1e-12, "n = " << n);
    CHECK(std::abs(*s.closed_form_limit - s.value) <= s.tail_bound);
    CHECK(s.tail_bound <= 4.0 / (4.0 * static_cast<double>(n) + 2.0) * (1 + 1e-12));
  }
  // Direct oracle computed independently in long double.
  CHECK(rel_err(sum_a_direct(3000), static_cast<double>(oracle_b_sum(0.0, 0.0, 3000))) < 1e-13);
}

TEST_CASE("mutated coefficient breaks the telescoped sum") {
  const auto good = detail::sum_a_recurrence_with_coefficient(100, 3.0);
  const auto bad = detail::sum_a_recurrence_with_coefficient(100, 2.9);
  CHECK(rel_err(good.value, sum_a_direct(100)) < 1e-12);
  CHECK(rel_err(bad.value, sum_a_direct(100)) > 1e-3);
}

TEST_CASE("b_seq examples") {
  for (std::int64_t n : {1, 2, 17, 5000}) CHECK(rel_err(b_seq({0.0, 0.0}, n), a_seq(n)) < 1e-14);
  CHECK(rel_err(b_seq({1.0, 1.0}, 1), 32.0 / (45.0 * kPi)) < 1e-15);
  CHECK(rel_err(b_seq({0.5, 0.5}, 1), kPi / 8.0) < 1e-15);
}

TEST_CASE("b_seq against Boost oracle and recurrence on the grid") {
  for (double m : kGrid) {
    for (double k : kGrid) {
      if (excluded(m, k)) continue;
      const GeneralizedParams p{m, k};
      for (std::int64_t n : {1, 2, 3, 50, 2000}) {
        CHECK(rel_err(b_seq(p, n), static_cast<double>(oracle_b(m, k, n))) < 1e-13);
      }
      // b_n / b_{n-1} = (n-1+m)(n-1+k)/((n-1/2+m)(n+1/2+k))
      for (std::int64_t n = 2; n <= 2000; n += 7) {
        const double x = static_cast<double>(n);
        const double ratio = (x - 1 + m) * (x - 1 + k) / ((x - 0.5 + m) * (x + 0.5 + k));
        REQUIRE_MESSAGE(rel_err(b_seq(p, n) / b_seq(p, n - 1), ratio) < 1e-12, "m=" << m << " k=" << k << " n=" << n);
      }
    }
  }
}

TEST_CASE("sum_b examples") {
  CHECK(rel_err(sum_b_partial({0.0, 0.0}, 1).value, 8.0 / (3.0 * kPi)) < 1e-15);
  CHECK(rel_err(sum_b_partial({0.0, 0.0}, 2).value, 152.0 / (45.0 * kPi)) < 1e-14);
  CHECK(rel_err(sum_b_partial({1.0, 2.0}, 50).value, static_cast<double>(oracle_b_sum(1.0, 2.0, 50))) < 1e-10);
  CHECK(rel_err(sum_b_closed({0.0, 0.0}), 4.0 - 8.0 / kPi) < 1e-15);
  CHECK(rel_err(sum_b_closed({0.5, 0.5}), 4.0 - kPi) < 1e-14);
  CHECK(rel_err(sum_b_closed({1.0, 0.0}), -4.0 * (1.0 - 4.0 / kPi)) < 1e-14);
}

TEST_CASE("sum_b on the grid: telescoped vs direct vs closed") {
  for (double m : kGrid) {
    for (double k : kGrid) {
      if (excluded(m, k)) continue;
      const GeneralizedParams p{m, k};
      const auto s = sum_b_partial(p, 2000);
      CHECK_MESSAGE(rel_err(s.value, sum_b_direct(p, 2000)) < 1e-10, "m=" << m << " k=" << k);
      CHECK(rel_err(s.value, static_cast<double>(oracle_b_sum(m, k, 2000))) < 1e-10);
      REQUIRE(s.closed_form_limit.has_value());
      CHECK(rel_err(*s.closed_form_limit, sum_b_closed(p)) < 1e-15);
      const double residual = sum_b_closed(p) - s.value;
      CHECK(residual > 0.0);
      CHECK(std::abs(residual) <= s.tail_bound);
    }
  }
}

TEST_CASE("sum_b closed form converges with a 1/N remainder") {
  const GeneralizedParams p{0.5, 0.5};
  const auto s = sum_b_partial(p, 10000);
  CHECK(std::abs(sum_b_closed(p) - s.value) <= s.tail_bound);
  CHECK(s.tail_bound < 1e-3);
}

TEST_CASE("validate rejects invalid parameters") {
  CHECK_THROWS_AS(validate({-1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(validate({0.0, -1.5}), DomainError);
  CHECK_THROWS_AS(validate({1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(b_seq({1.0, 0.5}, 3), DomainError);
  CHECK_THROWS_AS(sum_b_closed({-2.0, 0.0}), DomainError);
  CHECK_NOTHROW(validate({-0.4, 2.3}));
  try {
    validate({1.0, 0.5});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("2(k-m)+1") != std::string::npos);
  }
}

TEST_CASE("direct sums: parallel matches the serial reference") {
  for (std::int64_t n : {1, 4095, 4096, 4097, 50000}) {
    CHECK(rel_err(sum_a_direct(n), sum_a_direct_serial(n)) <= 4e-16);
    CHECK(std::abs(sum_b_direct({1.0, 2.3}, n) - sum_b_direct_serial({1.0, 2.3}, n)) <=
          4e-16 * sum_b_direct_serial({1.0, 2.3}, n));
  }
}

TEST_CASE("direct tail estimate") {
  CHECK(direct_tail_estimate(1e-8, 1000) == doctest::Approx(1e-5));
}
