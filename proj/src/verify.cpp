#include <wallisqm/verify.hpp>

#include <wallisqm/errors.hpp>
#include <wallisqm/gamma_kit.hpp>
#include <wallisqm/integral_kit.hpp>
#include <wallisqm/quadrature.hpp>
#include <wallisqm/report.hpp>
#include <wallisqm/variational.hpp>
#include <wallisqm/wallis_series.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace wallisqm {
namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Tracks the worst relative discrepancy against a tolerance.
class Tolerance {
 public:
  explicit Tolerance(double tol) : tol_(tol) {}

  void observe(double a, double b, const std::string& where) {
    const double d = rel_diff(a, b);
    if (!(d <= worst_)) {
      worst_ = d;
      where_ = where;
    }
  }
  bool ok() const { return worst_ <= tol_; }
  std::string detail() const {
    std::ostringstream os;
    os << "max rel diff " << format_real(worst_) << " (tol " << format_real(tol_) << ")";
    if (!where_.empty()) os << " at " << where_;
    return os.str();
  }

 private:
  double tol_;
  double worst_ = 0.0;
  std::string where_;
};

// Strict predicate over a grid; remembers the first failure.
class Predicate {
 public:
  void require(bool ok, const std::string& where) {
    ++count_;
    if (!ok && first_failure_.empty()) first_failure_ = where;
  }
  bool ok() const { return first_failure_.empty(); }
  std::string detail() const {
    return ok() ? std::to_string(count_) + " points" : "first violation at " + first_failure_;
  }

 private:
  std::size_t count_ = 0;
  std::string first_failure_;
};

std::vector<double> geometric_grid(double lo, double hi, int points) {
  std::vector<double> out;
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) out.push_back(i == points - 1 ? hi : lo * std::exp(step * i));
  return out;
}

std::vector<std::int64_t> integer_log_grid(std::int64_t lo, std::int64_t hi, int points) {
  std::vector<std::int64_t> out;
  for (const double v : geometric_grid(static_cast<double>(lo), static_cast<double>(hi), points)) {
    const auto n = static_cast<std::int64_t>(std::llround(v));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

const std::vector<GeneralizedParams>& generalized_grid() {
  static const std::vector<GeneralizedParams> grid = [] {
    std::vector<GeneralizedParams> g;
    const double values[] = {-0.4, 0.0, 0.5, 1.0, 2.3};
    for (const double m : values)
      for (const double k : values)
        if (2.0 * (k - m) + 1.0 != 0.0) g.push_back({m, k});
    return g;
  }();
  return grid;
}

std::string at(const char* name, double v) { return std::string(name) + "=" + format_real(v); }

struct Combo {
  TrialFamily family;
  PotentialKind pot;
};

constexpr Combo kCombos[] = {{TrialFamily::Gaussian, PotentialKind::Coulomb},
                             {TrialFamily::Gaussian, PotentialKind::HarmonicOscillator},
                             {TrialFamily::Lorentz, PotentialKind::Coulomb},
                             {TrialFamily::Lorentz, PotentialKind::HarmonicOscillator}};

std::string combo_name(const Combo& c, std::int64_t l) {
  return std::string(to_string(c.family)) + "-" + std::string(to_string(c.pot)) + " l=" + std::to_string(l);
}

class Suite {
 public:
  explicit Suite(double scale) : scale_(scale) {}

  double tol(double t) const { return t * scale_; }

  void add(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r;
    r.name = std::move(name);
    try {
      auto [ok, detail] = body();
      r.passed = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double scale_;
  std::vector<CheckResult> results_;
};

template <class C>
std::pair<bool, std::string> verdict(const C& c) {
  return {c.ok(), c.detail()};
}

void gamma_checks(Suite& s) {
  s.add("gamma: recurrence Gamma(x+1) = x Gamma(x)", [&] {
    Tolerance t(s.tol(1e-13));
    for (int i = 1; i <= 1000; ++i) {
      const double x = 0.1 * i;
      t.observe(gamma_ratio({x, 1.0, 0.0}), x, at("x", x));
    }
    for (const double x : geometric_grid(1e-3, 0.1, 40)) t.observe(gamma_ratio({x, 1.0, 0.0}), x, at("x", x));
    return verdict(t);
  });

  s.add("gamma: Wallis ratio identity W_n sqrt(pi) Gamma(n+1)/Gamma(n+1/2) = 1", [&] {
    Tolerance t(s.tol(1e-12));
    for (std::int64_t n = 0; n <= 10000; ++n) {
      const double nn = static_cast<double>(n);
      t.observe(wallis_ratio(n) * std::sqrt(kPi) * gamma_ratio({nn, 1.0, 0.5}), 1.0, at("n", nn));
    }
    return verdict(t);
  });

  s.add("gamma: Wallis ratio product and gamma paths agree on [100, 150]", [&] {
    Tolerance t(s.tol(1e-13));
    for (std::int64_t n = 100; n <= 150; ++n)
      t.observe(wallis_ratio_product(n), wallis_ratio_gamma(n), at("n", static_cast<double>(n)));
    return verdict(t);
  });

  s.add("gamma: Kazarinoff sandwich sqrt(n+1/4) < Gamma(n+1)/Gamma(n+1/2) < sqrt(n+1/2)", [] {
    Predicate p;
    for (std::int64_t n = 1; n <= 1000; ++n) p.require(kazarinoff_bounds(n).satisfied(), at("n", static_cast<double>(n)));
    for (const auto n : integer_log_grid(1000, 1000000, 40))
      p.require(kazarinoff_bounds(n).satisfied(), at("n", static_cast<double>(n)));
    return verdict(p);
  });

  s.add("gamma: quartic-root sandwich on [0.2, 1e5]", [] {
    Predicate p;
    for (const double x : geometric_grid(0.2, 1e5, 80)) p.require(quartic_root_bounds(x).satisfied(), at("x", x));
    return verdict(p);
  });

  s.add("gamma: Wendel deviation vanishes at s = 0, 1 and decays in x", [] {
    Predicate p;
    for (const double x : geometric_grid(1e-2, 1e8, 25)) {
      p.require(wendel_deviation(x, 0.0) == 0.0, at("x", x) + " s=0");
      p.require(wendel_deviation(x, 1.0) == 0.0, at("x", x) + " s=1");
    }
    for (const double sv : {0.25, 0.5, 0.75}) {
      double previous = std::numeric_limits<double>::infinity();
      for (double x = 10.0; x <= 1e6; x *= 10.0) {
        const double d = std::abs(wendel_deviation(x, sv));
        p.require(d <= previous, at("x", x) + " " + at("s", sv));
        previous = d;
      }
    }
    return verdict(p);
  });

  s.add("gamma: Wendel deviation at x = 1e6, s = 1/2 below 1e-6", [&] {
    const double d = wendel_deviation(1e6, 0.5);
    return std::pair{std::abs(d) < s.tol(1e-6), "deviation " + format_real(d)};
  });

  s.add("gamma: Stirling ratio asymptotic |Gamma(x+a)/Gamma(x+b) x^(b-a) - 1| < 10/x", [] {
    Predicate p;
    for (const double x : geometric_grid(100.0, 1e8, 30))
      for (double a = 0.0; a <= 2.0; a += 0.25)
        for (double b = 0.0; b <= 2.0; b += 0.25) {
          const double dev = gamma_ratio({x, a, b}) * std::pow(x, b - a) - 1.0;
          p.require(std::abs(dev) < 10.0 / x, at("x", x) + " " + at("a", a) + " " + at("b", b));
        }
    return verdict(p);
  });

  s.add("gamma: duplication formula residual", [&] {
    double worst = 0.0;
    for (std::int64_t l = 0; l <= 500; ++l) worst = std::max(worst, std::abs(duplication_residual(l)));
    return std::pair{worst < s.tol(1e-12), "max |residual| " + format_real(worst)};
  });
}

void series_checks(Suite& s, const VerifyConfig& config) {
  s.add("series: a_n recurrence 4n^2 a_n = 4(n-1)^2 a_(n-1) + a_n", [&] {
    Tolerance t(s.tol(1e-12));
    double previous = a_seq(1);
    for (std::int64_t n = 2; n <= 10000; ++n) {
      const double nn = static_cast<double>(n);
      const double an = a_seq(n);
      t.observe(4.0 * nn * nn * an, 4.0 * (nn - 1.0) * (nn - 1.0) * previous + an, at("n", nn));
      previous = an;
    }
    return verdict(t);
  });

  s.add("series: b_n telescoping recurrence", [&] {
    Tolerance t(s.tol(1e-12));
    for (const auto& p : generalized_grid()) {
      const double c = 4.0 / (2.0 * (p.k - p.m) + 1.0);
      double previous = b_seq(p, 1);
      for (std::int64_t n = 2; n <= 2000; ++n) {
        const double nn = static_cast<double>(n);
        const double bn = b_seq(p, n);
        t.observe(c * (nn + p.m) * (nn + p.k) * bn, c * (nn - 1.0 + p.m) * (nn - 1.0 + p.k) * previous + bn,
                  at("m", p.m) + " " + at("k", p.k) + " " + at("n", nn));
        previous = bn;
      }
    }
    return verdict(t);
  });

  s.add("series: b_n consecutive-term ratio", [&] {
    Tolerance t(s.tol(1e-12));
    for (const auto& p : generalized_grid()) {
      for (std::int64_t n = 2; n <= 2000; n += 37) {
        const double nn = static_cast<double>(n);
        const double expected =
            (nn + p.m - 1.0) * (nn + p.k - 1.0) / ((nn + p.m) * (nn + p.k) + 0.5 * (p.m - p.k) - 0.25);
        t.observe(b_seq(p, n) / b_seq(p, n - 1), expected, at("m", p.m) + " " + at("k", p.k) + " " + at("n", nn));
      }
    }
    return verdict(t);
  });

  s.add("series: sandwich 0 < 1 - n^2 a_n < 1/(4n+2) and 0 < pi/2 - P_n < (pi/2)/(4n+2)", [] {
    Predicate p;
    for (const auto n : integer_log_grid(1, 1000000, 40)) {
      const double nn = static_cast<double>(n);
      const double gap = 1.0 - scaled_a(n);
      p.require(gap > 0.0 && gap < 1.0 / (4.0 * nn + 2.0), at("n", nn) + " (n^2 a_n)");
      const double product_gap = kPi / 2.0 - wallis_partial_product(n);
      p.require(product_gap > 0.0 && product_gap < (kPi / 2.0) / (4.0 * nn + 2.0), at("n", nn) + " (P_n)");
    }
    return verdict(p);
  });

  s.add("series: P_n increasing, a_n decreasing, n^2 a_n increasing", [] {
    Predicate p;
    const auto products = wallis_partial_products(10000);
    double prev_a = a_seq(1);
    double prev_scaled = scaled_a(1);
    for (std::int64_t n = 2; n <= 10000; ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      p.require(products[i] > products[i - 1], at("n", static_cast<double>(n)) + " (P_n)");
      const double a = a_seq(n);
      const double sc = scaled_a(n);
      p.require(a < prev_a, at("n", static_cast<double>(n)) + " (a_n)");
      p.require(sc > prev_scaled, at("n", static_cast<double>(n)) + " (n^2 a_n)");
      prev_a = a;
      prev_scaled = sc;
    }
    return verdict(p);
  });

  s.add("series: n^2 a_n = (2/pi) P_n", [&] {
    Tolerance t(s.tol(1e-13));
    const auto products = wallis_partial_products(10000);
    for (std::int64_t n = 1; n <= 10000; ++n)
      t.observe(scaled_a(n), 2.0 / kPi * products[static_cast<std::size_t>(n - 1)], at("n", static_cast<double>(n)));
    return verdict(t);
  });

  s.add("series: closed partial sum 4n^2 a_n - 3a_1 vs direct summation of a_n", [&] {
    Tolerance t(s.tol(1e-12));
    for (const std::int64_t n : {1, 2, 3, 5, 10, 50, 100, 1000, 5000, 10000}) {
      const auto closed = detail::sum_a_recurrence_with_coefficient(n, config.a1_coefficient);
      t.observe(closed.value, sum_a_direct(n), at("n", static_cast<double>(n)));
    }
    return verdict(t);
  });

  s.add("series: partial sums of a_n approach 4 - 8/pi within the tail bound", [&] {
    Predicate p;
    for (const auto n : integer_log_grid(1, 1000000, 30)) {
      const auto ps = detail::sum_a_recurrence_with_coefficient(n, config.a1_coefficient);
      const double nn = static_cast<double>(n);
      const double residual = *ps.closed_form_limit - ps.value;
      p.require(residual > 0.0 && residual <= ps.tail_bound && ps.tail_bound <= 4.0 / (4.0 * nn + 2.0) + 1e-15,
                at("n", nn));
    }
    return verdict(p);
  });

  s.add("series: generalized telescoped sum vs direct summation (N = 2000)", [&] {
    Tolerance t(s.tol(1e-10));
    for (const auto& p : generalized_grid())
      t.observe(sum_b_partial(p, 2000).value, sum_b_direct(p, 2000), at("m", p.m) + " " + at("k", p.k));
    return verdict(t);
  });

  s.add("series: generalized closed form lies within the tail bound of the partial sum", [] {
    Predicate pr;
    for (const auto& p : generalized_grid()) {
      for (const std::int64_t n : {1, 10, 100, 2000}) {
        const auto ps = sum_b_partial(p, n);
        const double residual = sum_b_closed(p) - ps.value;
        const double nn = static_cast<double>(n);
        const double coarse = 4.0 * std::pow(1.0 + std::abs(p.m) + std::abs(p.k) + nn, 2) * b_seq(p, n) /
                              std::abs(2.0 * (p.k - p.m) + 1.0);
        pr.require(residual > 0.0 && residual <= ps.tail_bound && residual < coarse,
                   at("m", p.m) + " " + at("k", p.k) + " " + at("n", nn));
      }
    }
    return verdict(pr);
  });
}

void integral_checks(Suite& s) {
  s.add("integrals: Gaussian moment recurrence I_m = (m-1)/2 I_(m-2)", [&] {
    Tolerance t(s.tol(1e-14));
    for (int m = 2; m <= 60; ++m) t.observe(gaussian_moment(m), 0.5 * (m - 1) * gaussian_moment(m - 2), at("m", m));
    return verdict(t);
  });

  s.add("integrals: G_(l+1) recurrence equals (pi/2) W_l", [&] {
    Tolerance t(s.tol(1e-12));
    for (std::int64_t l = 0; l <= 300; ++l)
      t.observe(g_rational(l), kPi / 2.0 * wallis_ratio(l), at("l", static_cast<double>(l)));
    return verdict(t);
  });

  s.add("integrals: quadrature reproduces every closed form (l <= 15)", [&] {
    Predicate p;
    QuadratureOptions options;
    options.abs_tol = 0.0;
    options.rel_tol = 1e-12;
    auto compare = [&](double closed, const std::function<double(double)>& f, const std::string& where) {
      const auto q = quad_semiinfinite(f, options);
      const double allowed = std::max(s.tol(1e-9) * std::abs(closed), 10.0 * q.abs_error_estimate);
      p.require(std::abs(q.value - closed) <= allowed, where);
    };
    for (int m = 0; m <= 12; ++m)
      compare(gaussian_moment(m), [m](double x) { return std::exp((m == 0 ? 0.0 : m * std::log(x)) - x * x); },
              at("gaussian m", m));
    for (std::int64_t l = 0; l <= 15; ++l) {
      const double ll = static_cast<double>(l);
      auto rational = [](double m, double n) {
        return [m, n](double x) { return std::exp((m == 0.0 ? 0.0 : m * std::log(x)) - n * std::log1p(x * x)); };
      };
      compare(g_rational(l), rational(0.0, ll + 1.0), at("G l", ll));
      compare(lorentz_norm_integral(l), rational(2 * ll + 2, 2 * ll + 2), at("norm l", ll));
      compare(lorentz_coulomb_integral(l), rational(2 * ll + 1, 2 * ll + 2), at("coulomb l", ll));
    }
    return verdict(p);
  });

  s.add("integrals: x = tan(theta) substitution I_(m,n) = B((m+1)/2, n-(m+1)/2)", [&] {
    Tolerance t(s.tol(1e-13));
    for (double m = 0.0; m <= 12.0; m += 0.5)
      for (double n = 0.75; n <= 15.0; n += 0.75)
        if (2.0 * n - m > 1.0)
          t.observe(rational_moment({m, n}), beta_trig_integral((m + 1.0) / 2.0, n - (m + 1.0) / 2.0),
                    at("m", m) + " " + at("n", n));
    return verdict(t);
  });

  s.add("integrals: normalisation reduction I_(2l+2,2l+2) = G_(l+1) / 2^(2l+1)", [&] {
    Tolerance t(s.tol(1e-13));
    for (std::int64_t l = 0; l <= 60; ++l) {
      t.observe(lorentz_norm_integral(l), std::ldexp(g_rational(l), static_cast<int>(-(2 * l + 1))),
                at("l", static_cast<double>(l)));
      t.observe(lorentz_norm_integral(l), rational_moment({2.0 * l + 2.0, 2.0 * l + 2.0}),
                at("l", static_cast<double>(l)) + " vs I_(m,n)");
    }
    return verdict(t);
  });

  s.add("integrals: Coulomb integral factorial form equals duplication form", [&] {
    Tolerance t(s.tol(1e-13));
    for (std::int64_t l = 0; l <= 120; ++l)
      t.observe(lorentz_coulomb_integral(l), lorentz_coulomb_integral_gamma_form(l), at("l", static_cast<double>(l)));
    return verdict(t);
  });

  s.add("integrals: Coulomb/normalisation quotient 1/((l+1/2) pi W_l^2)", [&] {
    Tolerance t(s.tol(1e-13));
    for (std::int64_t l = 0; l <= 60; ++l)
      t.observe(coulomb_to_norm_ratio(l), lorentz_coulomb_integral(l) / lorentz_norm_integral(l),
                at("l", static_cast<double>(l)));
    return verdict(t);
  });
}

void variational_checks(Suite& s) {
  s.add("variational: <H> never below the exact level", [] {
    Predicate p;
    for (const auto& c : kCombos) {
      for (std::int64_t l = min_orbital_number(c.family, c.pot); l <= 50; ++l) {
        const double exact = exact_energy(c.pot, l);
        const double best = optimal_param_closed(c.family, c.pot, l);
        for (int j = -20; j <= 20; ++j) {
          const double param = best * std::pow(10.0, j / 10.0);
          const double e = expectation_energy_closed({c.family, l, param}, c.pot);
          const bool exact_case = c.family == TrialFamily::Gaussian && c.pot == PotentialKind::HarmonicOscillator && j == 0;
          p.require(exact_case ? std::abs(e - exact) <= 1e-15 * std::abs(exact) : e > exact,
                    combo_name(c, l) + " " + at("param", param));
        }
      }
    }
    return verdict(p);
  });

  s.add("variational: closed-form optimum is stationary", [&] {
    Predicate p;
    for (const auto& c : kCombos) {
      for (std::int64_t l = min_orbital_number(c.family, c.pot); l <= 50; ++l) {
        const double best = optimal_param_closed(c.family, c.pot, l);
        const double h = 1e-6 * best;
        const double plus = expectation_energy_closed({c.family, l, best + h}, c.pot);
        const double minus = expectation_energy_closed({c.family, l, best - h}, c.pot);
        const double centre = expectation_energy_closed({c.family, l, best}, c.pot);
        const double slope = (plus - minus) / (2.0 * h) * best / std::abs(centre);
        p.require(std::abs(slope) < s.tol(1e-6), combo_name(c, l));
      }
    }
    return verdict(p);
  });

  s.add("variational: closed-form energy equals <H> at the closed-form optimum", [&] {
    Tolerance t(s.tol(1e-13));
    for (const auto& c : kCombos)
      for (std::int64_t l = min_orbital_number(c.family, c.pot); l <= 50; ++l) {
        const auto e = variational_energy(c.family, c.pot, l, Method::ClosedForm);
        t.observe(e.value, expectation_energy_closed({c.family, l, e.optimal_param}, c.pot), combo_name(c, l));
      }
    return verdict(t);
  });

  s.add("variational: numeric path agrees with closed form (l <= 20)", [&] {
    Tolerance t(s.tol(1e-6));
    for (const auto& c : kCombos) {
      const auto closed = ratio_sequence(c.family, c.pot, 20, Method::ClosedForm);
      const auto numeric = ratio_sequence(c.family, c.pot, 20, Method::Numeric);
      for (std::size_t i = 0; i < closed.size(); ++i)
        t.observe(numeric[i].second, closed[i].second, combo_name(c, closed[i].first));
    }
    return verdict(t);
  });

  s.add("variational: Gaussian-Coulomb ratio equals (2/pi) P_(l+1)", [&] {
    Tolerance t(s.tol(1e-12));
    const auto ratios = ratio_sequence(TrialFamily::Gaussian, PotentialKind::Coulomb, 10000);
    const auto products = wallis_partial_products(10001);
    for (const auto& [l, r] : ratios)
      t.observe(r, 2.0 / kPi * products[static_cast<std::size_t>(l)], at("l", static_cast<double>(l)));
    return verdict(t);
  });

  s.add("variational: Lorentz-Coulomb ratio = ((n-1/2)(n+1/2)^2/n^3) (n^2 a_n)^2", [&] {
    Tolerance t(s.tol(1e-12));
    for (const auto& [l, r] : ratio_sequence(TrialFamily::Lorentz, PotentialKind::Coulomb, 2000)) {
      const double n = static_cast<double>(l) + 1.0;
      const double sc = scaled_a(l + 1);
      t.observe(r, (n - 0.5) * (n + 0.5) * (n + 0.5) / (n * n * n) * sc * sc, at("l", static_cast<double>(l)));
    }
    return verdict(t);
  });

  s.add("variational: Gaussian oscillator reproduces l + 3/2", [&] {
    Tolerance t(s.tol(1e-12));
    for (std::int64_t l = 0; l <= 20; ++l)
      t.observe(variational_energy(TrialFamily::Gaussian, PotentialKind::HarmonicOscillator, l, Method::ClosedForm).value,
                static_cast<double>(l) + 1.5, at("l", static_cast<double>(l)));
    return verdict(t);
  });

  s.add("variational: Lorentz oscillator ratio^2 in (1, 1 + 3/l), decreasing", [] {
    Predicate p;
    double previous = std::numeric_limits<double>::infinity();
    for (std::int64_t l = 2; l <= 10000; ++l) {
      const double ll = static_cast<double>(l);
      const double sq = (ll + 1.0) * (ll + 0.5) / ((ll + 1.5) * (ll - 0.5));
      const double r = variational_energy(TrialFamily::Lorentz, PotentialKind::HarmonicOscillator, l, Method::ClosedForm)
                           .ratio_to_exact;
      p.require(sq > 1.0 && sq < 1.0 + 3.0 / ll && sq < previous, at("l", ll));
      p.require(std::abs(r * r - sq) <= 1e-13 * sq, at("l", ll) + " (energy ratio)");
      previous = sq;
    }
    return verdict(p);
  });

  s.add("variational: ratios approach 1 monotonically", [] {
    Predicate p;
    for (const auto& c : kCombos) {
      const auto seq = ratio_sequence(c.family, c.pot, 2000);
      for (std::size_t i = 1; i < seq.size(); ++i) {
        const double before = std::abs(1.0 - seq[i - 1].second);
        const double now = std::abs(1.0 - seq[i].second);
        const bool exact = c.family == TrialFamily::Gaussian && c.pot == PotentialKind::HarmonicOscillator;
        p.require(exact ? now == 0.0 : now < before, combo_name(c, seq[i].first));
      }
    }
    return verdict(p);
  });
}

}  // namespace

double tolerance_scale(TolProfile profile) { return profile == TolProfile::Strict ? 1.0 : 100.0; }

std::vector<CheckResult> run_verify(const VerifyConfig& config) {
  Suite suite(tolerance_scale(config.profile));
  gamma_checks(suite);
  series_checks(suite, config);
  integral_checks(suite);
  variational_checks(suite);
  return suite.take();
}

}  // namespace wallisqm
