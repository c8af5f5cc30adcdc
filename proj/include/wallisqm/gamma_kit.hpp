#pragma once

// Gamma-function ratios, the Wallis ratio and the classical bounds on
// Gamma(x+1)/Gamma(x+1/2).
//
// Every ratio goes through a log-space difference that is formed without
// subtracting two large log-gamma values, so Gamma(x+a)/Gamma(x+b) stays
// accurate for arguments far beyond the overflow point of Gamma itself.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>

namespace wallisqm {

/// Quad-precision real (113-bit significand). Used where a bound is
/// tighter than double can resolve.
using ExtReal = boost::multiprecision::cpp_bin_float_quad;

struct GammaRatioQuery {
  double x;  // base argument
  double a;  // numerator shift
  double b;  // denominator shift
};

/// (lower, value, upper) for a double inequality. Satisfied only for a
/// strict sandwich; ties count as violations.
template <class Real>
struct BoundsTriple {
  Real lower;
  Real value;
  Real upper;

  bool satisfied() const { return lower < value && value < upper; }
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Extended-precision ln Gamma(x), x > 0. Used where several log-gammas of
/// moderate size are combined and double rounding would show.
long double log_gamma_long(long double x);

/// ln Gamma(x+a) - ln Gamma(x+b), accurate to a few ulps in absolute terms
/// even when both log-gammas are huge.
double log_gamma_ratio(const GammaRatioQuery& q);

/// Gamma(x+a)/Gamma(x+b). Throws DomainError at or left of a pole.
double gamma_ratio(const GammaRatioQuery& q);

/// W_n = (2n-1)!!/(2n)!!. Running product up to n = 150, gamma ratio above.
double wallis_ratio(std::int64_t n);

/// The two W_n routes, exposed so their agreement can be checked.
double wallis_ratio_product(std::int64_t n);
double wallis_ratio_gamma(std::int64_t n);

inline constexpr std::int64_t kWallisProductCutover = 150;

/// sqrt(n+1/4) < Gamma(n+1)/Gamma(n+1/2) < sqrt(n+1/2), n >= 1.
BoundsTriple<ExtReal> kazarinoff_bounds(std::int64_t n);

/// (x^2 + x/2 + 1/8 - 1/(128x))^(1/4) < Gamma(x+1)/Gamma(x+1/2)
///   < (x^2 + x/2 + 1/8)^(1/4).
///
/// The lower radicand is positive only for x > 0.0510236...; smaller x
/// (and any x <= 0) throws DomainError.
BoundsTriple<ExtReal> quartic_root_bounds(double x);

inline constexpr double kQuarticLowerRadicandRoot = 0.05102366;

/// Gamma(x+s)/(x^s Gamma(x)) - 1. Vanishes identically for s = 0 and s = 1.
double wendel_deviation(double x, double s);

/// Relative difference between Gamma(2l+1) and
/// 2^(2l) Gamma(l+1) Gamma(l+1/2)/sqrt(pi), evaluated in log space.
double duplication_residual(std::int64_t l);

/// Extended-precision Gamma(x+a)/Gamma(x+b) (same algorithm as
/// gamma_ratio, carried out in ExtReal).
ExtReal gamma_ratio_ext(const ExtReal& x, const ExtReal& a, const ExtReal& b);

}  // namespace wallisqm
