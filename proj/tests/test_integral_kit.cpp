#include <doctest.h>

#include <wallisqm/errors.hpp>
#include <wallisqm/gamma_kit.hpp>
#include <wallisqm/integral_kit.hpp>
#include <wallisqm/quadrature.hpp>

#include "test_util.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

using namespace wallisqm;
using wallisqm::test::rel_err;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gaussian_moment examples and recurrence") {
  CHECK(rel_err(gaussian_moment(0), std::sqrt(kPi) / 2) < 1e-15);
  CHECK(rel_err(gaussian_moment(1), 0.5) < 1e-15);
  CHECK(rel_err(gaussian_moment(3), 0.5) < 1e-15);
  for (int m = 2; m <= 60; ++m) {
    CHECK_MESSAGE(rel_err(gaussian_moment(m), (m - 1) / 2.0 * gaussian_moment(m - 2)) < 1e-14, "m = " << m);
    const double oracle = static_cast<double>(boost::math::tgamma((m + 1) / 2.0L) / 2);
    CHECK(rel_err(gaussian_moment(m), oracle) < 1e-14);
  }
  CHECK_THROWS_AS(gaussian_moment(-1), DomainError);
}

TEST_CASE("rational_moment examples and domain") {
  CHECK(rel_err(rational_moment({0, 1}), kPi / 2) < 1e-15);
  CHECK(rel_err(rational_moment({2, 2}), kPi / 4) < 1e-15);
  CHECK(rel_err(rational_moment({1, 2}), 0.5) < 1e-15);
  CHECK_THROWS_AS(rational_moment({2, 1.5}), DomainError);
  CHECK_THROWS_AS(rational_moment({-1, 3}), DomainError);
}

TEST_CASE("beta_trig_integral examples and substitution identity") {
  CHECK(rel_err(beta_trig_integral(0.5, 0.5), kPi / 2) < 1e-15);
  CHECK(rel_err(beta_trig_integral(1, 1), 0.5) < 1e-15);
  CHECK(rel_err(beta_trig_integral(1.5, 0.5), kPi / 4) < 1e-15);
  CHECK_THROWS_AS(beta_trig_integral(0, 1), DomainError);
  for (double m = -0.9; m <= 12; m += 0.7) {
    for (double n = 0.5; n <= 15; n += 0.9) {
      if (2 * n - m <= 1) continue;
      const double p = (m + 1) / 2;
      const double q = n - (m + 1) / 2;
      CHECK(rel_err(rational_moment({m, n}), beta_trig_integral(p, q)) < 1e-13);
      CHECK(rel_err(beta_trig_integral(p, q), static_cast<double>(boost::math::beta(static_cast<long double>(p),
                                                                                    static_cast<long double>(q)) /
                                                                  2)) < 1e-13);
    }
  }
}

TEST_CASE("G_rational examples and Wallis identity") {
  CHECK(rel_err(g_rational(0), kPi / 2) < 1e-15);
  CHECK(rel_err(g_rational(1), kPi / 4) < 1e-15);
  CHECK(rel_err(g_rational(2), 3 * kPi / 16) < 1e-15);
  for (std::int64_t l = 0; l <= 300; ++l) {
    REQUIRE_MESSAGE(rel_err(g_rational(l), kPi / 2 * wallis_ratio(l)) < 1e-12, "l = " << l);
  }
}

TEST_CASE("Lorentz integrals") {
  CHECK(rel_err(lorentz_norm_integral(0), kPi / 4) < 1e-15);
  CHECK(rel_err(lorentz_norm_integral(1), kPi / 32) < 1e-15);
  CHECK(rel_err(lorentz_norm_integral(2), 3 * kPi / 512) < 1e-15);
  CHECK(rel_err(lorentz_coulomb_integral(0), 0.5) < 1e-15);
  CHECK(rel_err(lorentz_coulomb_integral(1), 1.0 / 12) < 1e-15);
  CHECK(rel_err(lorentz_coulomb_integral(2), 1.0 / 60) < 1e-15);
  CHECK(rel_err(coulomb_to_norm_ratio(0), 2 / kPi) < 1e-15);
  CHECK(rel_err(coulomb_to_norm_ratio(1), 8 / (3 * kPi)) < 1e-15);
  for (std::int64_t l = 0; l <= 200; ++l) {
    const double dl = static_cast<double>(l);
    CHECK(rel_err(lorentz_norm_integral(l), rational_moment({2 * dl + 2, 2 * dl + 2})) < 1e-13);
    CHECK(rel_err(lorentz_norm_integral(l), std::ldexp(g_rational(l), -(2 * static_cast<int>(l) + 1))) < 1e-13);
    CHECK(rel_err(lorentz_coulomb_integral(l), lorentz_coulomb_integral_gamma_form(l)) < 1e-13);
    CHECK(rel_err(lorentz_coulomb_integral(l), rational_moment({2 * dl + 1, 2 * dl + 2})) < 1e-13);
    CHECK(rel_err(coulomb_to_norm_ratio(l), lorentz_coulomb_integral(l) / lorentz_norm_integral(l)) < 1e-13);
  }
  // (l!)^2 / (2 (2l+1)!) by exact factorials for small l.
  double fact[32] = {1};
  for (int i = 1; i < 32; ++i) fact[i] = fact[i - 1] * i;
  for (int l = 0; l <= 15; ++l) {
    CHECK(rel_err(lorentz_coulomb_integral(l), fact[l] * fact[l] / (2 * fact[2 * l + 1])) < 1e-14);
  }
}

TEST_CASE("closed forms against quadrature of the literal integrands") {
  const double tol = 1e-12;
  for (int m = 0; m <= 12; ++m) {
    const auto r = quad_semiinfinite([m](double x) { return std::pow(x, m) * std::exp(-x * x); }, tol);
    CHECK_MESSAGE(std::abs(r.value - gaussian_moment(m)) <= std::max(1e-9, 10 * r.abs_error_estimate), "m = " << m);
  }
  for (int l = 0; l <= 15; ++l) {
    QuadratureOptions opts;
    opts.abs_tol = 0;
    opts.rel_tol = 1e-12;
    const auto g = quad_semiinfinite([l](double x) { return std::pow(1 + x * x, -(l + 1)); }, opts);
    CHECK(std::abs(g.value - g_rational(l)) <= std::max(1e-9, 10 * g.abs_error_estimate));
    const auto norm = quad_semiinfinite(
        [l](double x) { return std::pow(x, 2 * l + 2) / std::pow(1 + x * x, 2 * l + 2); }, opts);
    CHECK(std::abs(norm.value - lorentz_norm_integral(l)) <= std::max(1e-9, 10 * norm.abs_error_estimate));
    CHECK(rel_err(norm.value, lorentz_norm_integral(l)) < 1e-9);
    const auto coul = quad_semiinfinite(
        [l](double x) { return std::pow(x, 2 * l + 1) / std::pow(1 + x * x, 2 * l + 2); }, opts);
    CHECK(std::abs(coul.value - lorentz_coulomb_integral(l)) <= std::max(1e-9, 10 * coul.abs_error_estimate));
    CHECK(rel_err(coul.value, lorentz_coulomb_integral(l)) < 1e-9);
  }
}
