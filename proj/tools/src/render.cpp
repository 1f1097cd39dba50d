#include "render.hpp"

#include <cstdio>

#include "genergy/errors.hpp"

namespace genergy::cli {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // fold the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : "NA";
}

std::string csv_cell(std::string_view raw) {
  bool quote = false;
  for (char c : raw)
    if (c == ',' || c == '"' || c == '\n' || c == '\r') quote = true;
  if (!raw.empty() && (raw.front() == ' ' || raw.back() == ' ')) quote = true;
  if (!quote) return std::string(raw);
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(cells[i]);
  }
  out += '\n';
  return out;
}

Json Json::object() {
  Json j;
  j.kind_ = Kind::object;
  return j;
}

Json Json::array() {
  Json j;
  j.kind_ = Kind::array;
  return j;
}

Json Json::str(std::string_view s) {
  Json j;
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  j.scalar_ = std::move(out);
  return j;
}

Json Json::num(double v) {
  Json j;
  j.scalar_ = format_double(v);
  return j;
}

Json Json::integer(long long v) {
  Json j;
  j.scalar_ = std::to_string(v);
  return j;
}

Json Json::boolean(bool v) {
  Json j;
  j.scalar_ = v ? "true" : "false";
  return j;
}

Json Json::null() {
  Json j;
  j.scalar_ = "null";
  return j;
}

Json& Json::add(std::string_view key, Json v) {
  if (kind_ != Kind::object) throw Error("internal: add() on a non-object");
  members_.emplace_back(std::string(key), std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  if (kind_ != Kind::array) throw Error("internal: push() on a non-array");
  items_.push_back(std::move(v));
  return *this;
}

void Json::write(std::string& out, int indent, int depth) const {
  const auto pad = [&](int d) {
    if (indent > 0) out.append(std::size_t(indent) * d, ' ');
  };
  const char* nl = indent > 0 ? "\n" : "";
  switch (kind_) {
    case Kind::scalar:
      out += scalar_;
      break;
    case Kind::object: {
      if (members_.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      out += nl;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        pad(depth + 1);
        out += Json::str(members_[i].first).scalar_;
        out += indent > 0 ? ": " : ":";
        members_[i].second.write(out, indent, depth + 1);
        if (i + 1 < members_.size()) out += ',';
        out += nl;
      }
      pad(depth);
      out += '}';
      break;
    }
    case Kind::array: {
      if (items_.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      out += nl;
      for (std::size_t i = 0; i < items_.size(); ++i) {
        pad(depth + 1);
        items_[i].write(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        out += nl;
      }
      pad(depth);
      out += ']';
      break;
    }
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  if (indent > 0) out += '\n';
  return out;
}

}  // namespace genergy::cli
