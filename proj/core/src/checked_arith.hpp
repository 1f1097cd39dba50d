#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "genergy/errors.hpp"

namespace genergy::detail {

using int128 = __int128;

inline std::string i128_str(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string digits;
  while (v != 0) {
    int d = int(v % 10);
    digits.push_back(char('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline int128 checked_add(int128 a, int128 b, const char* what) {
  int128 out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError(std::string("exact integer overflow while adding in ") + what);
  return out;
}

inline int128 checked_sub(int128 a, int128 b, const char* what) {
  int128 out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError(std::string("exact integer overflow while subtracting in ") + what);
  return out;
}

inline int128 checked_mul(int128 a, int128 b, const char* what) {
  int128 out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError(std::string("exact integer overflow while multiplying in ") + what);
  return out;
}

inline std::int64_t narrow_i64(int128 v, const std::string& what) {
  if (v > int128(std::numeric_limits<std::int64_t>::max()) ||
      v < int128(std::numeric_limits<std::int64_t>::min()))
    throw OverflowError(what + ": value " + i128_str(v) + " does not fit in int64");
  return std::int64_t(v);
}

}  // namespace genergy::detail
