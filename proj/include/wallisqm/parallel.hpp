#pragma once

// OpenMP kernels used by the series and sweep code, each paired with a
// serial reference. Results of the parallel kernels never depend on the
// thread count: sums are split into fixed-size blocks that are merged in
// index order, and maps write each output slot exactly once.

#include <wallisqm/summation.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

namespace wallisqm::kernels {

inline constexpr std::int64_t kSumBlock = 4096;

/// Compensated sum of term(i) for i = first..last (inclusive), one pass.
template <class Term>
double compensated_sum_serial(std::int64_t first, std::int64_t last, Term&& term) {
  CompensatedSum<double> acc;
  for (std::int64_t i = first; i <= last; ++i) acc += term(i);
  return acc.value();
}

/// Same sum, evaluated block-parallel. Each block is Neumaier-summed on
/// its own and the block partials are merged serially in block order.
template <class Term>
double compensated_sum(std::int64_t first, std::int64_t last, Term&& term) {
  if (last < first) return 0.0;
  const std::int64_t count = last - first + 1;
  const std::int64_t blocks = (count + kSumBlock - 1) / kSumBlock;
  if (blocks == 1) return compensated_sum_serial(first, last, term);

  std::vector<CompensatedSum<double>> partial(static_cast<std::size_t>(blocks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    try {
      const std::int64_t lo = first + b * kSumBlock;
      const std::int64_t hi = std::min(last, lo + kSumBlock - 1);
      CompensatedSum<double> acc;
      for (std::int64_t i = lo; i <= hi; ++i) acc += term(i);
      partial[static_cast<std::size_t>(b)] = acc;
    } catch (...) {
      errors[static_cast<std::size_t>(b)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CompensatedSum<double> total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

/// out[i] = f(in[i]). The first failing index (in index order) is rethrown.
template <class In, class Out, class F>
void map_into_serial(std::span<const In> in, std::span<Out> out, F&& f) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
}

template <class In, class Out, class F>
void map_into(std::span<const In> in, std::span<Out> out, F&& f) {
  const auto n = static_cast<std::int64_t>(in.size());
  std::vector<std::exception_ptr> errors(in.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = f(in[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace wallisqm::kernels
