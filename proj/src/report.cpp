#include <wallisqm/report.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace wallisqm {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty number in selection");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + token + "'");
  return v;
}

// Accepts "1000", "1e6" as long as the value is integral.
std::int64_t parse_integer(const std::string& token) {
  std::int64_t v = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec == std::errc() && ptr == end) return v;
  const double d = parse_real(token);
  if (d != std::floor(d) || std::abs(d) > 9.0e15) throw std::invalid_argument("not an integer: '" + token + "'");
  return static_cast<std::int64_t>(d);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_real(double d) {
  if (!std::isfinite(d)) return nullptr;
  return d;
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double d) const { return json_real(d); }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

ReportRow make_row(std::string label, std::int64_t n_or_l, double value, double reference,
                   std::optional<double> bound) {
  ReportRow row;
  row.label = std::move(label);
  row.n_or_l = n_or_l;
  row.value = value;
  row.reference = reference;
  row.abs_error = std::abs(value - reference);
  row.bound = bound;
  return row;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // Shortest of %.15g..%.17g that round-trips.
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  out << "label,n_or_l,value,reference,abs_error,bound";
  for (const auto& c : table.extra_columns) out << ',' << csv_escape(c);
  out << '\n';
  for (const auto& row : table.rows) {
    out << csv_escape(row.label) << ',' << row.n_or_l << ',' << format_real(row.value) << ','
        << format_real(row.reference) << ',' << format_real(std::abs(row.value - row.reference)) << ',';
    if (row.bound) out << format_real(*row.bound);
    for (std::size_t i = 0; i < table.extra_columns.size(); ++i)
      out << ',' << (i < row.extra.size() ? cell_text(row.extra[i]) : std::string{});
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    obj["label"] = row.label;
    obj["n_or_l"] = row.n_or_l;
    obj["value"] = json_real(row.value);
    obj["reference"] = json_real(row.reference);
    obj["abs_error"] = json_real(std::abs(row.value - row.reference));
    obj["bound"] = row.bound ? json_real(*row.bound) : nlohmann::ordered_json(nullptr);
    for (std::size_t i = 0; i < table.extra_columns.size(); ++i)
      obj[table.extra_columns[i]] = i < row.extra.size() ? cell_json(row.extra[i]) : nlohmann::ordered_json(nullptr);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

std::vector<std::int64_t> parse_integer_selection(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_integer(parts[0]));
    } else if (parts.size() == 3) {
      const auto start = parse_integer(parts[0]);
      const auto stop = parse_integer(parts[1]);
      const auto step = parse_integer(parts[2]);
      if (step <= 0) throw std::invalid_argument("range step must be positive: '" + item + "'");
      if (stop < start) throw std::invalid_argument("range stop below start: '" + item + "'");
      for (auto v = start; v <= stop; v += step) out.push_back(v);
    } else {
      throw std::invalid_argument("expected value or start:stop:step, got '" + item + "'");
    }
  }
  return out;
}

std::vector<double> parse_real_selection(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_real(parts[0]));
    } else if (parts.size() == 3) {
      const double start = parse_real(parts[0]);
      const double stop = parse_real(parts[1]);
      if (stop < start) throw std::invalid_argument("range stop below start: '" + item + "'");
      if (!parts[2].empty() && parts[2][0] == '*') {
        const double factor = parse_real(parts[2].substr(1));
        if (!(factor > 1.0) || !(start > 0.0)) throw std::invalid_argument("geometric range needs start > 0 and factor > 1");
        // Index-based so that the grid points are reproducible.
        for (int i = 0;; ++i) {
          const double v = start * std::pow(factor, i);
          if (v > stop * (1.0 + 1e-12)) break;
          out.push_back(v);
        }
      } else {
        const double step = parse_real(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument("range step must be positive: '" + item + "'");
        for (int i = 0;; ++i) {
          const double v = start + i * step;
          if (v > stop + 1e-12 * std::abs(step)) break;
          out.push_back(v);
        }
      }
    } else {
      throw std::invalid_argument("expected value or start:stop:step, got '" + item + "'");
    }
  }
  return out;
}

}  // namespace wallisqm
