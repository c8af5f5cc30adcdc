#pragma once

#include <cmath>
#include <concepts>

namespace wallisqm {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it also
/// compensates when the incoming term is larger than the running sum.
template <std::floating_point T>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;

  constexpr CompensatedSum& operator+=(T x) noexcept {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  /// Folds another accumulator in, keeping both of its parts.
  constexpr CompensatedSum& merge(const CompensatedSum& other) noexcept {
    *this += other.sum_;
    *this += other.compensation_;
    return *this;
  }

  constexpr T value() const noexcept { return sum_ + compensation_; }
  constexpr T raw_sum() const noexcept { return sum_; }
  constexpr T compensation() const noexcept { return compensation_; }

 private:
  T sum_{0};
  T compensation_{0};
};

}  // namespace wallisqm
