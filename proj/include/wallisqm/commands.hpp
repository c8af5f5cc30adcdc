#pragma once

// Table builders behind the CLI subcommands. Each returns the table and
// the process exit status it implies.

#include <wallisqm/report.hpp>
#include <wallisqm/variational.hpp>
#include <wallisqm/wallis_series.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace wallisqm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad user input (invalid parameter combination, malformed selection).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandResult {
  Table table;
  int exit_code = kExitOk;
};

enum class SumMode { Simple, General };
enum class BoundKind { Kazarinoff, Quartic, Wendel };

/// 2 P_n against pi with the envelope pi/(4n+2).
CommandResult cmd_pi(std::span<const std::int64_t> ns);

/// Telescoped vs direct partial sums against the closed-form limit.
CommandResult cmd_sum(SumMode mode, std::optional<GeneralizedParams> params, std::span<const std::int64_t> ns);

/// Variational levels, exact levels and their ratio, one row per l.
CommandResult cmd_variational(TrialFamily family, PotentialKind pot, std::span<const std::int64_t> ls,
                              Method method);

/// Bound sandwiches over a grid. For Wendel rows, s_values supplies the
/// shifts (each x is paired with each s).
CommandResult cmd_bounds(BoundKind kind, std::span<const double> grid, std::span<const double> s_values);

/// Closed forms vs quadrature for the Gaussian moments, I_{m,n}, G_{l+1},
/// and both Lorentz integrals, l = 0..l_max. rel_tol drives quadrature.
CommandResult cmd_integrals(std::int64_t l_max, double rel_tol);

}  // namespace wallisqm
