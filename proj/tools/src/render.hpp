#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genergy::cli {

// Fixed 12-significant-digit rendering shared by CSV and JSON, so equal
// inputs produce byte-identical output.
std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);  // NA when empty

// One CSV cell, quoted per RFC 4180 only when it needs to be.
std::string csv_cell(std::string_view raw);
std::string csv_line(const std::vector<std::string>& cells);

// Minimal JSON document builder.  Keys keep insertion order and numbers
// go through format_double, which keeps serialization deterministic.
class Json {
 public:
  static Json object();
  static Json array();
  static Json str(std::string_view s);
  static Json num(double v);
  static Json integer(long long v);
  static Json boolean(bool v);
  static Json null();

  Json& add(std::string_view key, Json v);  // object only
  Json& push(Json v);                       // array only

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { object, array, scalar };
  Kind kind_ = Kind::scalar;
  std::string scalar_;  // pre-rendered token
  std::vector<std::pair<std::string, Json>> members_;
  std::vector<Json> items_;

  void write(std::string& out, int indent, int depth) const;
};

}  // namespace genergy::cli
