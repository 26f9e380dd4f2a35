#include "hardy/report.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const unsigned char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += static_cast<char>(ch);
        }
    }
  }
  return out + "\"";
}

std::string json_number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

std::string json_cell(const Cell& c) {
  return std::visit(overloaded{[](std::monostate) -> std::string { return "null"; },
                               [](bool b) -> std::string { return b ? "true" : "false"; },
                               [](std::int64_t i) { return std::to_string(i); },
                               [](double d) { return json_number(d); },
                               [](const std::string& s) { return json_string(s); }},
                    c);
}

template <class T, class F>
std::string json_array(const std::vector<T>& xs, F&& each) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += each(xs[i]);
  }
  return out + "]";
}

std::string json_param(const ParamValue& v) {
  return std::visit(
      overloaded{[](bool b) -> std::string { return b ? "true" : "false"; },
                 [](std::int64_t i) { return std::to_string(i); }, [](double d) { return json_number(d); },
                 [](const std::string& s) { return json_string(s); },
                 [](const std::vector<double>& xs) { return json_array(xs, json_number); },
                 [](const std::vector<std::int64_t>& xs) {
                   return json_array(xs, [](std::int64_t i) { return std::to_string(i); });
                 }},
      v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  return std::visit(overloaded{[](std::monostate) -> std::string { return ""; },
                               [](bool b) -> std::string { return b ? "true" : "false"; },
                               [](std::int64_t i) { return std::to_string(i); },
                               [](double d) { return format_double(d); },
                               [](const std::string& s) { return csv_field(s); }},
                    c);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::exploratory:
      return "exploratory";
  }
  return "?";
}

int exit_code(Verdict v) { return v == Verdict::fail ? 1 : 0; }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_json(const VerificationReport& r) {
  std::ostringstream os;
  os << "{\"command\":" << json_string(r.command) << ",\"params\":{";
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) os << ",";
    os << json_string(r.params[i].first) << ":" << json_param(r.params[i].second);
  }
  os << "},\"verdict\":" << json_string(to_string(r.verdict)) << ",\"rows\":[";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    os << (i ? ",\n" : "\n") << "{";
    for (std::size_t j = 0; j < r.columns.size(); ++j) {
      if (j) os << ",";
      os << json_string(r.columns[j]) << ":" << (j < r.rows[i].size() ? json_cell(r.rows[i][j]) : "null");
    }
    os << "}";
  }
  os << "],\"min_margin\":" << (r.min_margin ? json_number(*r.min_margin) : "null")
     << ",\"runtime_ms\":" << r.runtime_ms << "}\n";
  return os.str();
}

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  for (std::size_t j = 0; j < r.columns.size(); ++j) os << (j ? "," : "") << csv_field(r.columns[j]);
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_cell(row[j]);
    os << "\n";
  }
  return os.str();
}

}  // namespace hardy
