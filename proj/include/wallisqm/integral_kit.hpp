#pragma once

// Closed forms of the radial integral families behind both trial
// functions. Each has a numeric counterpart via quad_semiinfinite.

#include <cstdint>

namespace wallisqm {

/// Parameters of I_{m,n} = int_0^inf x^m / (1+x^2)^n dx.
/// Convergent iff m > -1 and 2n - m > 1.
struct RationalMomentQuery {
  double m = 0.0;
  double n = 1.0;
};

/// int_0^inf x^m exp(-x^2) dx = Gamma((m+1)/2) / 2.
double gaussian_moment(int m);

/// I_{m,n} = Gamma((m+1)/2) Gamma(n-(m+1)/2) / (2 Gamma(n)).
double rational_moment(const RationalMomentQuery& q);

/// int_0^{pi/2} sin^{2p-1} cos^{2q-1} = Gamma(p) Gamma(q) / (2 Gamma(p+q)).
double beta_trig_integral(double p, double q);

/// G_{l+1} = int_0^inf dx/(1+x^2)^{l+1}, by G_{j+1} = (2j-1)/(2j) G_j from G_1 = pi/2.
double g_rational(std::int64_t l);

/// I_{2l+2,2l+2} = pi W_l / 2^{2l+2}.
double lorentz_norm_integral(std::int64_t l);

/// I_{2l+1,2l+2} = (l!)^2 / (2 (2l+1)!).
double lorentz_coulomb_integral(std::int64_t l);

/// The same integral through the duplication formula:
/// sqrt(pi) Gamma(l+1) / (2^{2l+2} Gamma(l+3/2)).
double lorentz_coulomb_integral_gamma_form(std::int64_t l);

/// I_{2l+1,2l+2} / I_{2l+2,2l+2} = 1 / ((l+1/2) pi W_l^2).
double coulomb_to_norm_ratio(std::int64_t l);

}  // namespace wallisqm
