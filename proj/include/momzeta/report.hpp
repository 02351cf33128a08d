#pragma once

// Output helpers. Every floating-point number is written with 17
// significant digits so that identical runs give identical bytes.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace momzeta {

using json = nlohmann::ordered_json;

inline constexpr int report_schema = 1;

inline std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_json_string(std::ostream& os, const std::string& s) {
  // Reuse the library's escaping.
  os << json(s).dump();
}

inline void write_json(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write_json_string(os, it.key());
        os << (indent > 0 ? ": " : ":");
        write_json(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        write_json(os, v, indent, depth + 1);
      }
      os << nl << close_pad << ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      // JSON has no NaN or infinity.
      if (std::isfinite(v))
        os << fmt17(v);
      else
        os << "null";
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

/// Serializes with %.17g floats; indent 0 gives a single line.
inline std::string dump_json(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::write_json(os, j, indent, 0);
  return os.str();
}

/// A number that may be absent (NaN) becomes JSON null.
inline json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

class csv_writer {
 public:
  csv_writer(std::ostream& os, const std::string& header) : os_(os) { os_ << header << '\n'; }

  template <class... Ts>
  void row(const Ts&... cells) {
    bool first = true;
    ((write_cell(cells, first)), ...);
    os_ << '\n';
  }

 private:
  void sep(bool& first) {
    if (!first) os_ << ',';
    first = false;
  }
  void write_cell(double v, bool& first) {
    sep(first);
    os_ << fmt17(v);
  }
  void write_cell(std::uint64_t v, bool& first) {
    sep(first);
    os_ << v;
  }
  void write_cell(unsigned v, bool& first) {
    sep(first);
    os_ << v;
  }
  void write_cell(int v, bool& first) {
    sep(first);
    os_ << v;
  }
  void write_cell(const std::string& v, bool& first) {
    sep(first);
    os_ << v;
  }
  void write_cell(const char* v, bool& first) {
    sep(first);
    os_ << v;
  }

  std::ostream& os_;
};

}  // namespace momzeta
