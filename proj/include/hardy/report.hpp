#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hardy {

enum class Verdict { pass, fail, exploratory };

const char* to_string(Verdict v);

/// 0 for pass/exploratory, 1 for fail.
int exit_code(Verdict v);

using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;
using ParamValue =
    std::variant<bool, std::int64_t, double, std::string, std::vector<double>, std::vector<std::int64_t>>;

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, ParamValue>> params;  // serialized in insertion order
  Verdict verdict = Verdict::exploratory;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<double> min_margin;
  std::int64_t runtime_ms = 0;
};

/// Shortest decimal string that parses back to the same double.
/// Non-finite values: "nan", "inf", "-inf".
std::string format_double(double x);

/// One JSON object with keys command, params, verdict, rows, min_margin,
/// runtime_ms. Rows are objects keyed by column name; non-finite doubles
/// become null.
std::string to_json(const VerificationReport& r);

/// Header row of column names, one record per row, RFC 4180 quoting.
std::string to_csv(const VerificationReport& r);

}  // namespace hardy
