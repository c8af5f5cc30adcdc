#pragma once

// Log-gamma difference kernel shared by the double and quad-precision
// paths. Header-private to src/.

#include <wallisqm/gamma_kit.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace wallisqm::detail {

// B_2k / (2k (2k-1)), k = 1..15: coefficients of the Stirling series
// ln Gamma(z) = (z-1/2) ln z - z + ln(2 pi)/2 + sum_k c_k z^(1-2k).
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 15> kStirlingCoefficients{{
    {1, 12},
    {-1, 360},
    {1, 1260},
    {-1, 1680},
    {1, 1188},
    {-691, 360360},
    {1, 156},
    {-3617, 122400},
    {43867, 244188},
    {-174611, 125400},
    {77683, 5796},
    {-236364091, 1506960},
    {657931, 300},
    {-3392780147, 93960},
    {1723168255201, 2492028},
}};

template <class Real>
struct KernelTraits {
  // Arguments are shifted up to at least this value before the asymptotic
  // series is applied. 15 terms at z >= threshold leave a truncation error
  // below the type's epsilon.
  static constexpr int threshold = 12;
};

template <>
struct KernelTraits<ExtReal> {
  static constexpr int threshold = 30;
};

template <class Real>
Real stirling_tail(const Real& z) {
  const Real inv = Real(1) / z;
  const Real inv2 = inv * inv;
  Real power = inv;
  Real sum = 0;
  for (const auto& [num, den] : kStirlingCoefficients) {
    sum += Real(num) / Real(den) * power;
    power *= inv2;
  }
  return sum;
}

/// ln Gamma(v + d) - ln Gamma(v) for v > 0, v + d > 0.
///
/// Both arguments are moved above the asymptotic threshold by a common
/// integer shift K, using ln Gamma(z) = ln Gamma(z+K) - sum_j ln(z+j); the
/// two shift sums combine term-wise into log1p(d/(v+j)). Above the
/// threshold the Stirling difference is rewritten around ln v so the large
/// (z - 1/2) ln z pieces cancel analytically:
///   d ln v + (v + d - 1/2) log1p(d/v) - d + S(v+d) - S(v).
template <class Real>
Real log_gamma_shift_difference(Real v, const Real& d) {
  using std::ceil;
  using std::log;
  using std::log1p;
  if (d == 0) return Real(0);

  const Real threshold = KernelTraits<Real>::threshold;
  const Real low = d < 0 ? v + d : v;
  Real shift_sum = 0;
  if (low < threshold) {
    const auto shifts = static_cast<int>(ceil(static_cast<double>(threshold - low)));
    for (int j = 0; j < shifts; ++j) shift_sum += log1p(d / (v + j));
    v += shifts;
  }
  const Real main = d * log(v) + (v + d - Real(0.5)) * log1p(d / v) - d +
                    (stirling_tail(v + d) - stirling_tail(v));
  return main - shift_sum;
}

}  // namespace wallisqm::detail
