#pragma once

// Flat-file report emission: CSV with '#'-prefixed metadata lines, or JSON
// with a "meta" object.  Output is byte-deterministic for a fixed config:
// fixed field order, fixed number formatting, no wall-clock data.

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ratios/core.hpp"

namespace ratios {

inline constexpr const char* kToolVersion = "1.0.0";

// Shortest-ish fixed formatting; %.12g keeps full informative precision and
// identical bytes across runs.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

using CellValue = std::variant<std::string, double, long long, bool, Cplx>;

struct ReportTable {
  std::vector<std::pair<std::string, std::string>> meta;  // ordered
  std::vector<std::string> columns;  // complex columns expand to _re/_im
  std::vector<std::vector<CellValue>> rows;

  void add_meta(std::string key, std::string value) {
    meta.emplace_back(std::move(key), std::move(value));
  }
  void add_meta(std::string key, double value) {
    meta.emplace_back(std::move(key), fmt_double(value));
  }
  void add_meta(std::string key, long long value) {
    meta.emplace_back(std::move(key), std::to_string(value));
  }
  void add_meta(std::string key, Cplx value) {
    meta.emplace_back(std::move(key), fmt_double(value.real()) + "+" +
                                          fmt_double(value.imag()) + "i");
  }
};

namespace detail {

inline void csv_field(std::ostream& os, const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    os << s;
    return;
  }
  os << '"';
  for (char c : s) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

inline void csv_cell(std::ostream& os, const CellValue& v) {
  if (std::holds_alternative<std::string>(v)) {
    csv_field(os, std::get<std::string>(v));
  } else if (std::holds_alternative<double>(v)) {
    os << fmt_double(std::get<double>(v));
  } else if (std::holds_alternative<long long>(v)) {
    os << std::get<long long>(v);
  } else if (std::holds_alternative<bool>(v)) {
    os << (std::get<bool>(v) ? "true" : "false");
  } else {
    const Cplx& z = std::get<Cplx>(v);
    os << fmt_double(z.real()) << ',' << fmt_double(z.imag());
  }
}

inline void json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      default: os << c;
    }
  }
  os << '"';
}

inline void json_cell(std::ostream& os, const CellValue& v) {
  if (std::holds_alternative<std::string>(v)) {
    json_string(os, std::get<std::string>(v));
  } else if (std::holds_alternative<double>(v)) {
    os << fmt_double(std::get<double>(v));
  } else if (std::holds_alternative<long long>(v)) {
    os << std::get<long long>(v);
  } else if (std::holds_alternative<bool>(v)) {
    os << (std::get<bool>(v) ? "true" : "false");
  } else {
    const Cplx& z = std::get<Cplx>(v);
    os << "{\"re\":" << fmt_double(z.real())
       << ",\"im\":" << fmt_double(z.imag()) << '}';
  }
}

}  // namespace detail

inline void write_csv(std::ostream& os, const ReportTable& t) {
  os << "# version=" << kToolVersion << '\n';
  for (const auto& [k, v] : t.meta) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    // complex columns carry two CSV fields
    bool is_cplx = !t.rows.empty() && i < t.rows[0].size() &&
                   std::holds_alternative<Cplx>(t.rows[0][i]);
    if (is_cplx)
      os << t.columns[i] << "_re," << t.columns[i] << "_im";
    else
      os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      detail::csv_cell(os, row[i]);
    }
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const ReportTable& t) {
  os << "{\"meta\":{\"version\":\"" << kToolVersion << '"';
  for (const auto& [k, v] : t.meta) {
    os << ',';
    detail::json_string(os, k);
    os << ':';
    detail::json_string(os, v);
  }
  os << "},\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) os << ',';
    os << '{';
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
      if (i) os << ',';
      detail::json_string(os, t.columns[i]);
      os << ':';
      detail::json_cell(os, t.rows[r][i]);
    }
    os << '}';
  }
  os << "]}\n";
}

inline void write_report(const std::string& path, const std::string& format,
                         const ReportTable& t) {
  std::ostringstream buf;
  if (format == "json")
    write_json(buf, t);
  else
    write_csv(buf, t);
  if (path.empty() || path == "-") {
    std::fputs(buf.str().c_str(), stdout);
    return;
  }
  std::ofstream os(path, std::ios::binary);  // LF endings everywhere
  if (!os) throw RangeError("cannot open output path: " + path);
  os << buf.str();
}

}  // namespace ratios
