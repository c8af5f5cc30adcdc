#include <wallisqm/variational.hpp>

#include <wallisqm/errors.hpp>
#include <wallisqm/gamma_kit.hpp>
#include <wallisqm/golden_section.hpp>
#include <wallisqm/integral_kit.hpp>
#include <wallisqm/parallel.hpp>
#include <wallisqm/quadrature.hpp>

#include <cmath>
#include <numeric>
#include <span>
#include <string>

namespace wallisqm {
namespace {

using U = UnitsConvention;

// Rydberg-like prefactor m e^4 / (2 hbar^2).
constexpr double kCoulombScale = U::mass * U::charge_sq * U::charge_sq / (2.0 * U::hbar * U::hbar);

void require_valid(TrialFamily family, PotentialKind pot, std::int64_t l) {
  if (l < 0) throw DomainError("orbital number l must be nonnegative");
  if (family == TrialFamily::Lorentz && pot == PotentialKind::HarmonicOscillator && l < 1) {
    throw DivergenceError("Lorentz trial function in the oscillator needs l >= 1: <r^2> diverges at l = 0");
  }
}

void require_valid(const TrialSpec& spec, PotentialKind pot) {
  require_valid(spec.family, pot, spec.l);
  if (!(spec.param > 0.0) || !std::isfinite(spec.param))
    throw DomainError("trial scale parameter must be positive and finite");
}

// Gamma(l+1)/Gamma(l+3/2)
double gaussian_coulomb_ratio(std::int64_t l) { return gamma_ratio({static_cast<double>(l), 1.0, 1.5}); }

// Gamma(l+1)/Gamma(l+1/2)
double lorentz_coulomb_ratio(std::int64_t l) { return gamma_ratio({static_cast<double>(l), 1.0, 0.5}); }

// <r^2> for the Gaussian at alpha: (1/(2 alpha)) I_{2l+4}/I_{2l+2} with the
// Gaussian moments I_m; the moment ratio is Gamma(l+5/2)/Gamma(l+3/2).
double gaussian_mean_r2(std::int64_t l, double alpha) {
  return gamma_ratio({static_cast<double>(l), 2.5, 1.5}) / (2.0 * alpha);
}

// <r^2> for the Lorentz function at a: a^2 I_{2l+4,2l+2}/I_{2l+2,2l+2}.
double lorentz_mean_r2(std::int64_t l, double a) {
  const double ll = static_cast<double>(l);
  const double num = rational_moment({2.0 * ll + 4.0, 2.0 * ll + 2.0});
  const double den = rational_moment({2.0 * ll + 2.0, 2.0 * ll + 2.0});
  return a * a * num / den;
}

struct RadialTrial {
  TrialFamily family;
  double l;
  double param;
  double log_reference;  // ln R at the length scale, divided out of R

  double log_r(double r) const {
    const double angular = l == 0.0 ? 0.0 : l * std::log(r);
    return family == TrialFamily::Gaussian ? angular - param * r * r
                                           : angular - (l + 1.0) * std::log(param * param + r * r);
  }
  // R^2 scaled so that it is O(1) near the bulk of the function.
  double r_squared(double r) const { return std::exp(2.0 * (log_r(r) - log_reference)); }
  // r R'(r) / R(r)
  double log_slope(double r) const {
    return family == TrialFamily::Gaussian ? l - 2.0 * param * r * r
                                           : l - 2.0 * (l + 1.0) * r * r / (param * param + r * r);
  }
};

double length_scale(const TrialSpec& spec) {
  const double ll = static_cast<double>(spec.l);
  return spec.family == TrialFamily::Gaussian ? std::sqrt((ll + 1.0) / (2.0 * spec.param)) : spec.param;
}

EnergyEstimate closed_estimate(TrialFamily family, PotentialKind pot, std::int64_t l) {
  const double ll = static_cast<double>(l);
  double value = 0.0;
  if (pot == PotentialKind::Coulomb) {
    if (family == TrialFamily::Gaussian) {
      const double g = gaussian_coulomb_ratio(l);
      value = -kCoulombScale * g * g / (ll + 1.5);
    } else {
      const double g = lorentz_coulomb_ratio(l);
      const double g2 = g * g;
      value = -kCoulombScale * g2 * g2 / ((ll + 1.0) * std::pow(ll + 0.5, 3));
    }
  } else {
    if (family == TrialFamily::Gaussian) {
      value = U::hbar * U::omega * (ll + 1.5);
    } else {
      value = U::hbar * U::omega * std::sqrt((ll + 1.0) * (ll + 0.5) * (ll + 1.5) / (ll - 0.5));
    }
  }
  EnergyEstimate out;
  out.value = value;
  out.optimal_param = optimal_param_closed(family, pot, l);
  out.method = Method::ClosedForm;
  return out;
}

EnergyEstimate numeric_estimate(TrialFamily family, PotentialKind pot, std::int64_t l) {
  const double center = std::log(optimal_param_closed(family, pot, l));
  const double bracket = std::log(10.0);
  auto energy_at = [&](double log_param) {
    return expectation_energy_numeric({family, l, std::exp(log_param)}, pot);
  };
  const MinimizeResult best = golden_section_minimize(energy_at, center - bracket, center + bracket, 1e-10);
  EnergyEstimate out;
  out.value = best.value;
  out.optimal_param = std::exp(best.argmin);
  out.method = Method::Numeric;
  return out;
}

}  // namespace

std::string_view to_string(TrialFamily f) { return f == TrialFamily::Gaussian ? "gaussian" : "lorentz"; }

std::string_view to_string(PotentialKind p) { return p == PotentialKind::Coulomb ? "coulomb" : "oscillator"; }

std::string_view to_string(Method m) { return m == Method::ClosedForm ? "closed" : "numeric"; }

std::int64_t min_orbital_number(TrialFamily family, PotentialKind pot) {
  return family == TrialFamily::Lorentz && pot == PotentialKind::HarmonicOscillator ? 1 : 0;
}

double expectation_energy_closed(const TrialSpec& spec, PotentialKind pot) {
  require_valid(spec, pot);
  const double ll = static_cast<double>(spec.l);
  const double p = spec.param;
  if (spec.family == TrialFamily::Gaussian) {
    const double kinetic = U::hbar * U::hbar * p / U::mass * (ll + 1.5);
    if (pot == PotentialKind::Coulomb) return kinetic - U::charge_sq * std::sqrt(2.0 * p) * gaussian_coulomb_ratio(spec.l);
    return kinetic + 0.5 * U::mass * U::omega * U::omega * gaussian_mean_r2(spec.l, p);
  }
  const double kinetic = U::hbar * U::hbar / (2.0 * U::mass) * (ll + 1.0) * (ll + 0.5) / (p * p);
  if (pot == PotentialKind::Coulomb) {
    const double g = lorentz_coulomb_ratio(spec.l);
    return kinetic - U::charge_sq / p * g * g / (ll + 0.5);
  }
  return kinetic + 0.5 * U::mass * U::omega * U::omega * lorentz_mean_r2(spec.l, p);
}

double expectation_energy_numeric(const TrialSpec& spec, PotentialKind pot, double rel_tol) {
  require_valid(spec, pot);
  if (!(rel_tol > 0.0)) throw DomainError("expectation_energy_numeric: tolerance must be positive");

  const double scale = length_scale(spec);
  RadialTrial trial{spec.family, static_cast<double>(spec.l), spec.param, 0.0};
  trial.log_reference = trial.log_r(scale);
  const double centrifugal = trial.l * (trial.l + 1.0);

  QuadratureOptions options;
  options.abs_tol = 0.0;
  options.rel_tol = rel_tol;
  options.length_scale = scale;
  options.max_level = 14;

  const auto norm = quad_semiinfinite([&](double r) { return trial.r_squared(r) * r * r; }, options);
  // R'^2 r^2 = R^2 (r R'/R)^2
  const auto kinetic = quad_semiinfinite(
      [&](double r) {
        const double s = trial.log_slope(r);
        return 0.5 * U::hbar * U::hbar / U::mass * trial.r_squared(r) * (s * s + centrifugal);
      },
      options);
  const auto potential = quad_semiinfinite(
      [&](double r) {
        if (pot == PotentialKind::Coulomb) return -U::charge_sq * trial.r_squared(r) * r;
        return 0.5 * U::mass * U::omega * U::omega * trial.r_squared(r) * r * r * r * r;
      },
      options);
  return (kinetic.value + potential.value) / norm.value;
}

double optimal_param_closed(TrialFamily family, PotentialKind pot, std::int64_t l) {
  require_valid(family, pot, l);
  const double ll = static_cast<double>(l);
  if (family == TrialFamily::Gaussian) {
    if (pot == PotentialKind::Coulomb) {
      // d/dalpha [hbar^2 alpha (l+3/2)/m - e^2 sqrt(2 alpha) g] = 0
      const double root = U::mass * U::charge_sq * gaussian_coulomb_ratio(l) / (U::hbar * U::hbar * (ll + 1.5));
      return 0.5 * root * root;
    }
    return U::mass * U::omega / (2.0 * U::hbar);
  }
  const double kinetic_coeff = U::hbar * U::hbar / (2.0 * U::mass) * (ll + 1.0) * (ll + 0.5);
  if (pot == PotentialKind::Coulomb) {
    const double g = lorentz_coulomb_ratio(l);
    const double coulomb_coeff = U::charge_sq * g * g / (ll + 0.5);
    return 2.0 * kinetic_coeff / coulomb_coeff;
  }
  // kinetic_coeff/a^2 + r2_coeff a^2, r2_coeff = m omega^2 (l+3/2) / (2(l-1/2))
  const double r2_coeff = 0.5 * U::mass * U::omega * U::omega * (ll + 1.5) / (ll - 0.5);
  return std::pow(kinetic_coeff / r2_coeff, 0.25);
}

double exact_energy(PotentialKind pot, std::int64_t l) {
  if (l < 0) throw DomainError("exact_energy: l must be nonnegative");
  const double n = static_cast<double>(l) + 1.0;
  if (pot == PotentialKind::Coulomb) return -kCoulombScale / (n * n);
  return U::hbar * U::omega * (static_cast<double>(l) + 1.5);
}

EnergyEstimate variational_energy(TrialFamily family, PotentialKind pot, std::int64_t l, Method method) {
  require_valid(family, pot, l);
  EnergyEstimate out = method == Method::ClosedForm ? closed_estimate(family, pot, l) : numeric_estimate(family, pot, l);
  out.exact_reference = exact_energy(pot, l);
  out.ratio_to_exact = out.value / out.exact_reference;
  return out;
}

namespace {

std::vector<std::int64_t> orbital_range(TrialFamily family, PotentialKind pot, std::int64_t l_max) {
  const std::int64_t l_min = min_orbital_number(family, pot);
  if (l_max < l_min) throw DomainError("ratio_sequence: l_max must be >= " + std::to_string(l_min));
  std::vector<std::int64_t> ls(static_cast<std::size_t>(l_max - l_min + 1));
  std::iota(ls.begin(), ls.end(), l_min);
  return ls;
}

}  // namespace

std::vector<std::pair<std::int64_t, double>> ratio_sequence(TrialFamily family, PotentialKind pot,
                                                            std::int64_t l_max, Method method) {
  const auto ls = orbital_range(family, pot, l_max);
  std::vector<std::pair<std::int64_t, double>> out(ls.size());
  kernels::map_into(std::span<const std::int64_t>(ls), std::span(out), [&](std::int64_t l) {
    return std::pair{l, variational_energy(family, pot, l, method).ratio_to_exact};
  });
  return out;
}

std::vector<std::pair<std::int64_t, double>> ratio_sequence_serial(TrialFamily family, PotentialKind pot,
                                                                   std::int64_t l_max, Method method) {
  const auto ls = orbital_range(family, pot, l_max);
  std::vector<std::pair<std::int64_t, double>> out(ls.size());
  kernels::map_into_serial(std::span<const std::int64_t>(ls), std::span(out), [&](std::int64_t l) {
    return std::pair{l, variational_energy(family, pot, l, method).ratio_to_exact};
  });
  return out;
}

}  // namespace wallisqm
