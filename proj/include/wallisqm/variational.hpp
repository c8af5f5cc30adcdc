#pragma once

// Variational energies of the lowest level at fixed orbital number l
// (zero radial nodes) for the Coulomb and isotropic-oscillator potentials,
// with Gaussian  R(r) = r^l exp(-alpha r^2)
// and Lorentz    R(r) = r^l / (a^2 + r^2)^(l+1)
// trial functions. The angular factor Y_l^m is integrated out analytically,
// leaving the radial problem with centrifugal term l(l+1)/(2 r^2).
//
// Two independent routes: closed forms, and radial quadrature of <H>
// followed by golden-section minimisation over the scale parameter.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace wallisqm {

enum class TrialFamily { Gaussian, Lorentz };
enum class PotentialKind { Coulomb, HarmonicOscillator };
enum class Method { ClosedForm, Numeric };

/// hbar = m = e^2 = omega = 1. Kept as named constants so the formulas
/// read with their physical dimensions.
struct UnitsConvention {
  static constexpr double hbar = 1.0;
  static constexpr double mass = 1.0;
  static constexpr double charge_sq = 1.0;
  static constexpr double omega = 1.0;
};

struct TrialSpec {
  TrialFamily family = TrialFamily::Gaussian;
  std::int64_t l = 0;
  double param = 1.0;  // alpha (Gaussian) or a (Lorentz)
};

struct EnergyEstimate {
  double value = 0.0;
  double optimal_param = 0.0;
  Method method = Method::ClosedForm;
  double exact_reference = 0.0;
  double ratio_to_exact = 0.0;
};

std::string_view to_string(TrialFamily f);
std::string_view to_string(PotentialKind p);
std::string_view to_string(Method m);

/// Smallest l for which <H> exists: 1 for Lorentz in the oscillator
/// (<r^2> diverges at l = 0), otherwise 0.
std::int64_t min_orbital_number(TrialFamily family, PotentialKind pot);

/// <H> at the given scale parameter, closed form.
double expectation_energy_closed(const TrialSpec& spec, PotentialKind pot);

/// <H> by radial quadrature with the first-derivative kinetic form
///   [int (R'^2 r^2 / 2 + l(l+1) R^2 / 2 + V R^2 r^2) dr] / int R^2 r^2 dr.
/// rel_tol is the relative tolerance for each radial integral.
double expectation_energy_numeric(const TrialSpec& spec, PotentialKind pot, double rel_tol = 1e-12);

/// Stationary point of the closed-form <H> in the scale parameter.
double optimal_param_closed(TrialFamily family, PotentialKind pot, std::int64_t l);

EnergyEstimate variational_energy(TrialFamily family, PotentialKind pot, std::int64_t l, Method method);

/// Exact lowest energy at orbital number l: -1/(2(l+1)^2) or l + 3/2.
double exact_energy(PotentialKind pot, std::int64_t l);

/// (l, E_var/E_exact) for l = min_orbital_number .. l_max, evaluated in
/// parallel over l.
std::vector<std::pair<std::int64_t, double>> ratio_sequence(TrialFamily family, PotentialKind pot,
                                                            std::int64_t l_max,
                                                            Method method = Method::ClosedForm);

/// Serial reference for ratio_sequence.
std::vector<std::pair<std::int64_t, double>> ratio_sequence_serial(TrialFamily family, PotentialKind pot,
                                                                   std::int64_t l_max,
                                                                   Method method = Method::ClosedForm);

}  // namespace wallisqm
