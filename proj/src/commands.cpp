#include <wallisqm/commands.hpp>

#include <wallisqm/errors.hpp>
#include <wallisqm/gamma_kit.hpp>
#include <wallisqm/integral_kit.hpp>
#include <wallisqm/parallel.hpp>
#include <wallisqm/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace wallisqm {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSumAgreement = 1e-10;

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string params_label(const GeneralizedParams& p) {
  std::ostringstream os;
  os << "b(m=" << format_real(p.m) << ";k=" << format_real(p.k) << ")";
  return os.str();
}

// Envelope on 1 - E_var/E_exact (or E_var/E_exact - 1 for the Lorentz
// oscillator), derived from the Kazarinoff bounds on n^2 a_n.
std::optional<double> ratio_envelope(TrialFamily family, PotentialKind pot, std::int64_t l) {
  const double n = static_cast<double>(l) + 1.0;
  const double gap = 1.0 / (4.0 * n + 2.0);  // 1 - n^2 a_n < gap
  if (pot == PotentialKind::Coulomb) {
    if (family == TrialFamily::Gaussian) return gap;
    const double prefactor = (n - 0.5) * (n + 0.5) * (n + 0.5) / (n * n * n);
    const double low = 1.0 - gap;
    return 1.0 - prefactor * low * low;
  }
  if (family == TrialFamily::Lorentz) return std::sqrt(1.0 + 3.0 / static_cast<double>(l)) - 1.0;
  return std::nullopt;
}

double integrand_power_gaussian(double x, double m) {
  const double log_power = m == 0.0 ? 0.0 : m * std::log(x);
  return std::exp(log_power - x * x);
}

double integrand_rational(double x, double m, double n) {
  const double log_power = m == 0.0 ? 0.0 : m * std::log(x);
  return std::exp(log_power - n * std::log1p(x * x));
}

}  // namespace

CommandResult cmd_pi(std::span<const std::int64_t> ns) {
  CommandResult result;
  result.table.extra_columns = {"satisfied"};
  for (const auto n : ns) {
    if (n < 1) throw UsageError("pi: every n must be >= 1, got " + std::to_string(n));
  }
  std::vector<double> products(ns.size());
  kernels::map_into(ns, std::span(products), [](std::int64_t n) { return wallis_partial_product(n); });

  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double envelope = std::numbers::pi / (4.0 * static_cast<double>(ns[i]) + 2.0);
    auto row = make_row("wallis", ns[i], 2.0 * products[i], std::numbers::pi, envelope);
    const bool ok = row.value < std::numbers::pi && row.abs_error < envelope;
    row.extra = {ok};
    if (!ok) result.exit_code = kExitCheckFailed;
    result.table.rows.push_back(std::move(row));
  }
  return result;
}

CommandResult cmd_sum(SumMode mode, std::optional<GeneralizedParams> params, std::span<const std::int64_t> ns) {
  GeneralizedParams p;
  if (mode == SumMode::General) {
    if (!params) throw UsageError("sum: general mode needs --m and --k");
    try {
      validate(*params);
    } catch (const DomainError& e) {
      throw UsageError(std::string("sum: ") + e.what());
    }
    p = *params;
  }
  for (const auto n : ns) {
    if (n < 1) throw UsageError("sum: every N must be >= 1, got " + std::to_string(n));
  }

  CommandResult result;
  result.table.extra_columns = {"direct", "direct_rel_diff", "direct_tail_estimate", "satisfied"};
  for (const auto n : ns) {
    PartialSum telescoped;
    double direct = 0.0;
    double last_term = 0.0;
    std::string label;
    if (mode == SumMode::Simple) {
      telescoped = sum_a_recurrence(n);
      direct = sum_a_direct(n);
      last_term = a_seq(n);
      label = "a";
    } else {
      telescoped = sum_b_partial(p, n);
      direct = sum_b_direct(p, n);
      last_term = b_seq(p, n);
      label = params_label(p);
    }
    auto row = make_row(label, n, telescoped.value, telescoped.closed_form_limit.value_or(kNaN), telescoped.tail_bound);
    const double rel = relative_difference(telescoped.value, direct);
    const bool ok = rel <= kSumAgreement && row.abs_error <= telescoped.tail_bound;
    row.extra = {direct, rel, direct_tail_estimate(last_term, n), ok};
    if (!ok) result.exit_code = kExitCheckFailed;
    result.table.rows.push_back(std::move(row));
  }
  return result;
}

CommandResult cmd_variational(TrialFamily family, PotentialKind pot, std::span<const std::int64_t> ls,
                              Method method) {
  const auto l_min = min_orbital_number(family, pot);
  for (const auto l : ls) {
    if (l < l_min) {
      if (l_min == 1)
        throw UsageError("variational: the Lorentz trial function in the oscillator diverges at l = 0; use l >= 1");
      throw UsageError("variational: l must be nonnegative");
    }
  }

  std::vector<EnergyEstimate> estimates(ls.size());
  kernels::map_into(ls, std::span(estimates),
                    [&](std::int64_t l) { return variational_energy(family, pot, l, method); });

  CommandResult result;
  result.table.extra_columns = {"ratio", "one_minus_ratio", "ratio_envelope", "optimal_param", "method", "satisfied"};
  const std::string label = std::string(to_string(family)) + "-" + std::string(to_string(pot));
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto& e = estimates[i];
    const auto envelope = ratio_envelope(family, pot, ls[i]);
    std::optional<double> bound;
    if (envelope) bound = *envelope * std::abs(e.exact_reference);
    auto row = make_row(label, ls[i], e.value, e.exact_reference, bound);
    const double deviation = 1.0 - e.ratio_to_exact;
    bool ok = true;
    if (envelope) ok = std::abs(deviation) < *envelope;
    row.extra = {e.ratio_to_exact, deviation, envelope ? Cell{*envelope} : Cell{}, e.optimal_param,
                 std::string(to_string(e.method)), ok};
    if (!ok) result.exit_code = kExitCheckFailed;
    result.table.rows.push_back(std::move(row));
  }
  return result;
}

namespace {

struct BoundRow {
  ReportRow row;
  bool violated = false;
  bool domain_error = false;
};

BoundRow sandwich_row(const char* label, std::int64_t n_or_l, double x, const BoundsTriple<ExtReal>& t) {
  BoundRow out;
  const double lower = static_cast<double>(t.lower);
  const double upper = static_cast<double>(t.upper);
  out.row = make_row(label, n_or_l, static_cast<double>(t.value), lower, upper - lower);
  const bool ok = t.satisfied();
  const double lower_margin = static_cast<double>((t.value - t.lower) / t.value);
  const double upper_margin = static_cast<double>((t.upper - t.value) / t.value);
  out.row.extra = {x, Cell{}, lower, upper, lower_margin, upper_margin, ok, std::string("ok")};
  out.violated = !ok;
  return out;
}

BoundRow domain_row(const char* label, std::int64_t n_or_l, double x, double s, const std::string& why) {
  BoundRow out;
  out.row = make_row(label, n_or_l, kNaN, kNaN);
  out.row.extra = {x, std::isnan(s) ? Cell{} : Cell{s}, Cell{}, Cell{}, Cell{}, Cell{}, false, "domain-error: " + why};
  out.domain_error = true;
  return out;
}

}  // namespace

CommandResult cmd_bounds(BoundKind kind, std::span<const double> grid, std::span<const double> s_values) {
  struct Job {
    std::int64_t index;
    double x;
    double s;
  };
  std::vector<Job> jobs;
  if (kind == BoundKind::Wendel) {
    if (s_values.empty()) throw UsageError("bounds: wendel needs at least one s value");
    for (const double s : s_values)
      for (const double x : grid) jobs.push_back({static_cast<std::int64_t>(jobs.size()), x, s});
  } else {
    for (const double x : grid) jobs.push_back({static_cast<std::int64_t>(jobs.size()), x, kNaN});
  }

  std::vector<BoundRow> rows(jobs.size());
  kernels::map_into(std::span<const Job>(jobs), std::span(rows), [kind](const Job& job) -> BoundRow {
    try {
      switch (kind) {
        case BoundKind::Kazarinoff: {
          if (job.x != std::floor(job.x) || job.x < 1.0)
            return domain_row("kazarinoff", job.index, job.x, job.s, "n must be an integer >= 1");
          const auto n = static_cast<std::int64_t>(job.x);
          return sandwich_row("kazarinoff", n, job.x, kazarinoff_bounds(n));
        }
        case BoundKind::Quartic:
          return sandwich_row("quartic", job.index, job.x, quartic_root_bounds(job.x));
        case BoundKind::Wendel: {
          const double deviation = wendel_deviation(job.x, job.s);
          BoundRow out;
          // |deviation| <= s(1-s)/x holds for s in [0, 1]; outside that
          // range the row is informational only.
          const bool checked = job.s >= 0.0 && job.s <= 1.0;
          std::optional<double> envelope;
          if (checked) envelope = job.s * (1.0 - job.s) / job.x;
          out.row = make_row("wendel", job.index, deviation, 0.0, envelope);
          const bool ok = !checked || std::abs(deviation) <= *envelope;
          out.row.extra = {job.x,
                           job.s,
                           envelope ? Cell{-*envelope} : Cell{},
                           envelope ? Cell{*envelope} : Cell{},
                           Cell{},
                           Cell{},
                           ok,
                           std::string(checked ? "ok" : "unchecked")};
          out.violated = !ok;
          return out;
        }
      }
    } catch (const DomainError& e) {
      const char* label = kind == BoundKind::Kazarinoff ? "kazarinoff" : kind == BoundKind::Quartic ? "quartic" : "wendel";
      return domain_row(label, job.index, job.x, job.s, e.what());
    }
    return {};
  });

  CommandResult result;
  result.table.extra_columns = {"x", "s", "lower", "upper", "lower_margin", "upper_margin", "satisfied", "status"};
  bool violated = false;
  bool domain = false;
  for (auto& r : rows) {
    violated = violated || r.violated;
    domain = domain || r.domain_error;
    result.table.rows.push_back(std::move(r.row));
  }
  result.exit_code = violated ? kExitCheckFailed : domain ? kExitUsage : kExitOk;
  return result;
}

CommandResult cmd_integrals(std::int64_t l_max, double rel_tol) {
  if (l_max < 0) throw UsageError("integrals: l-max must be nonnegative");
  if (!(rel_tol > 0.0)) throw UsageError("integrals: tol must be positive");

  struct Job {
    std::string label;
    std::int64_t index;
    double closed;
    std::function<double(double)> integrand;
  };
  std::vector<Job> jobs;
  for (int m = 0; m <= 12; ++m) {
    jobs.push_back({"gaussian_moment", m, gaussian_moment(m),
                    [m](double x) { return integrand_power_gaussian(x, m); }});
  }
  for (std::int64_t l = 0; l <= l_max; ++l) {
    const double ll = static_cast<double>(l);
    jobs.push_back({"rational_moment", l, rational_moment({ll, ll + 1.0}),
                    [ll](double x) { return integrand_rational(x, ll, ll + 1.0); }});
    jobs.push_back({"g_rational", l, g_rational(l), [ll](double x) { return integrand_rational(x, 0.0, ll + 1.0); }});
    jobs.push_back({"lorentz_norm", l, lorentz_norm_integral(l),
                    [ll](double x) { return integrand_rational(x, 2.0 * ll + 2.0, 2.0 * ll + 2.0); }});
    jobs.push_back({"lorentz_coulomb", l, lorentz_coulomb_integral(l),
                    [ll](double x) { return integrand_rational(x, 2.0 * ll + 1.0, 2.0 * ll + 2.0); }});
  }

  std::vector<QuadratureResult> quads(jobs.size());
  kernels::map_into(std::span<const Job>(jobs), std::span(quads), [rel_tol](const Job& job) {
    QuadratureOptions options;
    options.abs_tol = 0.0;
    options.rel_tol = rel_tol;
    return quad_semiinfinite(job.integrand, options);
  });

  CommandResult result;
  result.table.extra_columns = {"quad_error_estimate", "evaluations", "satisfied"};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const double allowed = std::max(1e-9 * std::abs(jobs[i].closed), 10.0 * quads[i].abs_error_estimate);
    auto row = make_row(jobs[i].label, jobs[i].index, quads[i].value, jobs[i].closed, allowed);
    const bool ok = row.abs_error <= allowed;
    row.extra = {quads[i].abs_error_estimate, quads[i].evaluations, ok};
    if (!ok) result.exit_code = kExitCheckFailed;
    result.table.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace wallisqm
