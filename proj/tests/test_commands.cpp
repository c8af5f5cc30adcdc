#include <doctest.h>

#include <wallisqm/commands.hpp>
#include <wallisqm/verify.hpp>

#include <cmath>
#include <numbers>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

using namespace wallisqm;

namespace {

bool all_satisfied(const Table& t) {
  std::size_t idx = t.extra_columns.size();
  for (std::size_t i = 0; i < t.extra_columns.size(); ++i)
    if (t.extra_columns[i] == "satisfied") idx = i;
  for (const auto& row : t.rows)
    if (!std::get<bool>(row.extra.at(idx))) return false;
  return true;
}

}  // namespace

TEST_CASE("pi table") {
  const std::vector<std::int64_t> ns = {1, 10, 100, 1000000};
  const auto r = cmd_pi(ns);
  CHECK(r.exit_code == kExitOk);
  REQUIRE(r.table.rows.size() == 4);
  CHECK(all_satisfied(r.table));
  CHECK(r.table.rows[0].value == doctest::Approx(8.0 / 3.0));
  const std::vector<std::int64_t> bad = {0};
  CHECK_THROWS_AS(cmd_pi(bad), UsageError);
}

TEST_CASE("sum tables") {
  const std::vector<std::int64_t> ns = {1, 2, 10000};
  const auto a = cmd_sum(SumMode::Simple, std::nullopt, ns);
  CHECK(a.exit_code == kExitOk);
  CHECK(all_satisfied(a.table));
  const auto b = cmd_sum(SumMode::General, GeneralizedParams{0.5, 0.5}, ns);
  CHECK(b.exit_code == kExitOk);
  CHECK(b.table.rows[2].reference == doctest::Approx(4 - std::numbers::pi).epsilon(1e-14));
  CHECK_THROWS_AS(cmd_sum(SumMode::General, GeneralizedParams{1.0, 0.5}, ns), UsageError);
}

TEST_CASE("variational tables") {
  const std::vector<std::int64_t> ls = {0, 1, 5, 20};
  for (auto fam : {TrialFamily::Gaussian, TrialFamily::Lorentz}) {
    for (auto method : {Method::ClosedForm, Method::Numeric}) {
      const auto r = cmd_variational(fam, PotentialKind::Coulomb, ls, method);
      CHECK(r.exit_code == kExitOk);
      CHECK(all_satisfied(r.table));
    }
  }
  CHECK_THROWS_AS(cmd_variational(TrialFamily::Lorentz, PotentialKind::HarmonicOscillator, ls, Method::ClosedForm),
                  UsageError);
  const std::vector<std::int64_t> from_one = {1, 2, 3};
  CHECK(cmd_variational(TrialFamily::Lorentz, PotentialKind::HarmonicOscillator, from_one, Method::Numeric).exit_code ==
        kExitOk);
}

TEST_CASE("bounds tables") {
  const std::vector<double> ks = {1, 2, 10, 1000, 1e6};
  const std::vector<double> none;
  const auto k = cmd_bounds(BoundKind::Kazarinoff, ks, none);
  CHECK(k.exit_code == kExitOk);
  CHECK(all_satisfied(k.table));

  const std::vector<double> qs = {0.2, 1, 50, 1e5};
  CHECK(cmd_bounds(BoundKind::Quartic, qs, none).exit_code == kExitOk);

  const std::vector<double> tiny = {0.01, 1};
  const auto d = cmd_bounds(BoundKind::Quartic, tiny, none);
  CHECK(d.exit_code == kExitUsage);
  REQUIRE(d.table.rows.size() == 2);

  const std::vector<double> xs = {10, 1e6};
  const std::vector<double> ss = {0, 0.5, 1};
  const auto w = cmd_bounds(BoundKind::Wendel, xs, ss);
  CHECK(w.exit_code == kExitOk);
  CHECK(w.table.rows.size() == 6);
}

TEST_CASE("integrals table") {
  const auto r = cmd_integrals(15, 1e-12);
  CHECK(r.exit_code == kExitOk);
  CHECK(all_satisfied(r.table));
  CHECK(r.table.rows.size() == 13 + 4 * 16);
}

TEST_CASE("verify: all checks pass, mutation is caught by name") {
  const auto results = run_verify({});
  CHECK(results.size() >= 30);
  for (const auto& c : results) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);

  VerifyConfig mutated;
  mutated.a1_coefficient = 2.9;
  bool named_failure = false;
  for (const auto& c : run_verify(mutated)) {
    if (!c.passed && c.name.find("4n^2 a_n - 3a_1") != std::string::npos) named_failure = true;
  }
  CHECK(named_failure);
  CHECK(tolerance_scale(TolProfile::Relaxed) == 100.0);
  CHECK(tolerance_scale(TolProfile::Strict) == 1.0);
}
