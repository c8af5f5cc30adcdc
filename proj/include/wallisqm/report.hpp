#pragma once

// Tabular output shared by every CLI subcommand: CSV with a header row and
// 17-significant-digit reals, or JSON as an array of row objects.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wallisqm {

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct ReportRow {
  std::string label;
  std::int64_t n_or_l = 0;
  double value = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;  // recomputed as |value - reference| on output
  std::optional<double> bound;
  std::vector<Cell> extra;  // aligned with Table::extra_columns
};

struct Table {
  std::vector<std::string> extra_columns;
  std::vector<ReportRow> rows;
};

enum class OutputFormat { Csv, Json };

ReportRow make_row(std::string label, std::int64_t n_or_l, double value, double reference,
                   std::optional<double> bound = std::nullopt);

/// Shortest "%.17g"-style text; parses back to the identical double.
std::string format_real(double x);

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);
void write_table(std::ostream& out, const Table& table, OutputFormat format);

/// "7", "1,10,100" or "start:stop:step" (inclusive). Throws
/// std::invalid_argument on malformed input.
std::vector<std::int64_t> parse_integer_selection(std::string_view text);

/// As above for reals; additionally "start:stop:*factor" gives a
/// geometric grid, e.g. "1:1e6:*10".
std::vector<double> parse_real_selection(std::string_view text);

}  // namespace wallisqm
