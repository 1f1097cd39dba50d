#include "genergy/graph6.hpp"

#include <cstddef>
#include <string>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

constexpr std::string_view kHeaderTag = ">>graph6<<";
constexpr int kByteLow = 63;    // '?'
constexpr int kByteHigh = 126;  // '~'
// Largest order the 3-byte header can carry without its first payload
// byte colliding with the '~~' marker of the unsupported 8-byte form.
constexpr int kMaxOrder = 258047;

int checked_byte(std::string_view line, std::size_t at) {
  if (at >= line.size())
    throw ParseError("truncated graph6 data", line.size());
  const int b = static_cast<unsigned char>(line[at]);
  if (b < kByteLow || b > kByteHigh)
    throw ParseError("byte " + std::to_string(b) +
                         " outside the graph6 range 63..126",
                     at);
  return b;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t at = 0;
  if (line.substr(0, kHeaderTag.size()) == kHeaderTag) at = kHeaderTag.size();
  if (at >= line.size()) throw ParseError("empty graph6 line", at);

  long n = 0;
  const int first = checked_byte(line, at);
  if (first < kByteHigh) {
    n = first - kByteLow;
    ++at;
  } else {
    ++at;
    if (at < line.size() && static_cast<unsigned char>(line[at]) == kByteHigh)
      throw ParseError("graph6 orders of 2^18 and above are not supported", at);
    long v = 0;
    for (int i = 0; i < 3; ++i) v = (v << 6) | (checked_byte(line, at + i) - kByteLow);
    at += 3;
    if (v <= 62)
      throw ParseError("non-canonical long order header for order " +
                           std::to_string(v),
                       at - 3);
    n = v;
  }

  Graph g{int(n)};
  int group = 0;
  int left = 0;
  std::size_t group_at = at;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        group_at = at;
        group = checked_byte(line, at) - kByteLow;
        ++at;
        left = 6;
      }
      --left;
      if ((group >> left) & 1) g.add_edge(i, j);
    }
  if (left > 0 && (group & ((1 << left) - 1)) != 0)
    throw ParseError("nonzero padding bits", group_at);
  if (at != line.size())
    throw ParseError("trailing data after " + std::to_string(n) +
                         "-vertex graph6 encoding",
                     at);
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder)
    throw DomainError("graph6 orders above " + std::to_string(kMaxOrder) +
                      " need the 8-byte header, which is not supported");
  std::string out;
  if (n <= 62) {
    out.push_back(char(kByteLow + n));
  } else {
    out.push_back(char(kByteHigh));
    out.push_back(char(kByteLow + ((n >> 12) & 63)));
    out.push_back(char(kByteLow + ((n >> 6) & 63)));
    out.push_back(char(kByteLow + (n & 63)));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(char(kByteLow + group));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(char(kByteLow + (group << (6 - filled))));
  return out;
}

}  // namespace genergy
