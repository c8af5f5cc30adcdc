#include <doctest.h>

#include <wallisqm/errors.hpp>
#include <wallisqm/golden_section.hpp>
#include <wallisqm/parallel.hpp>
#include <wallisqm/summation.hpp>

#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

using namespace wallisqm;
using wallisqm::test::rel_err;

TEST_CASE("compensated sum recovers what naive summation loses") {
  CompensatedSum<double> acc;
  acc += 1.0;
  acc += 1e100;
  acc += 1.0;
  acc += -1e100;
  CHECK(acc.value() == 2.0);

  CompensatedSum<double> tiny;
  tiny += 1.0;
  for (int i = 0; i < 10000; ++i) tiny += 1e-17;
  CHECK(std::abs(tiny.value() - (1.0 + 1e-13)) < 1e-16);
}

TEST_CASE("compensated sum of 1/i^2 reaches pi^2/6 minus the tail") {
  const std::int64_t n = 1000000;
  const double s = kernels::compensated_sum(1, n, [](std::int64_t i) {
    const double x = static_cast<double>(i);
    return 1.0 / (x * x);
  });
  // tail sum_{i>n} 1/i^2 = 1/n - 1/(2n^2) + O(n^-3)
  const double expected = std::numbers::pi * std::numbers::pi / 6 - (1.0 / n - 0.5 / (double(n) * n));
  CHECK(rel_err(s, expected) < 1e-15);
}

TEST_CASE("merge keeps both parts") {
  CompensatedSum<double> a;
  CompensatedSum<double> b;
  a += 1.0;
  a += 1e-20;
  b += 2e-20;
  a.merge(b);
  CHECK(a.raw_sum() + a.compensation() == a.value());
  CHECK(std::abs(a.compensation() - 3e-20) < 1e-35);
}

TEST_CASE("parallel compensated sum matches serial on random terms") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::int64_t count : {0, 1, 4095, 4096, 4097, 100000}) {
    std::vector<double> terms(static_cast<std::size_t>(count));
    for (auto& t : terms) t = u(rng) * std::exp(10 * u(rng));
    const auto term = [&](std::int64_t i) { return terms[static_cast<std::size_t>(i)]; };
    const double par = kernels::compensated_sum(0, count - 1, term);
    const double ser = kernels::compensated_sum_serial(0, count - 1, term);
    double scale = 0;
    for (double t : terms) scale += std::abs(t);
    CHECK(std::abs(par - ser) <= 4e-16 * scale);
    // Thread-count independence: repeated evaluation is bit-identical.
    CHECK(par == kernels::compensated_sum(0, count - 1, term));
  }
}

TEST_CASE("parallel sum rethrows a term failure") {
  const auto term = [](std::int64_t i) -> double {
    if (i == 9000) throw std::runtime_error("bad term");
    return 1.0;
  };
  CHECK_THROWS_AS(kernels::compensated_sum(0, 20000, term), std::runtime_error);
}

TEST_CASE("map_into matches the serial map and reports the first failure") {
  std::vector<int> in(1000);
  for (int i = 0; i < 1000; ++i) in[static_cast<std::size_t>(i)] = i;
  std::vector<double> a(in.size());
  std::vector<double> b(in.size());
  const auto f = [](int i) { return std::sqrt(static_cast<double>(i)) + i; };
  kernels::map_into(std::span<const int>(in), std::span<double>(a), f);
  kernels::map_into_serial(std::span<const int>(in), std::span<double>(b), f);
  CHECK(a == b);

  const auto g = [](int i) -> double {
    if (i == 300) throw std::out_of_range("300");
    if (i == 700) throw std::length_error("700");
    return 0.0;
  };
  CHECK_THROWS_AS(kernels::map_into(std::span<const int>(in), std::span<double>(a), g), std::out_of_range);
}

TEST_CASE("golden section") {
  const auto r = golden_section_minimize([](double x) { return (x - 1.3) * (x - 1.3) + 2.0; }, 0.0, 5.0, 1e-10);
  // A quadratic is flat to sqrt(eps) around its minimum.
  CHECK(std::abs(r.argmin - 1.3) < 1e-7);
  CHECK(std::abs(r.value - 2.0) < 1e-15);
  CHECK(r.iterations > 0);

  const auto c = golden_section_minimize([](double x) { return std::cosh(x - 0.25); }, -3.0, 4.0, 1e-12);
  CHECK(std::abs(c.argmin - 0.25) < 1e-7);

  // Monotone function: the minimum sits at the boundary side of the bracket.
  const auto m = golden_section_minimize([](double x) { return x; }, 2.0, 3.0, 1e-9);
  CHECK(m.argmin - 2.0 < 1e-8);

  CHECK_THROWS_AS(golden_section_minimize([](double x) { return x; }, 1.0, 1.0, 1e-9), DomainError);
  CHECK_THROWS_AS(golden_section_minimize([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}
