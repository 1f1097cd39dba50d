#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genergy {

// Base type for every failure raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The iterative eigensolver missed its off-diagonal target within the
// sweep limit.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// graph6 decoding failure.  offset() is the byte position within the
// input line at which decoding gave up.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_ = 0;
};

// Exact integer rank and floating-point zero count could not be
// reconciled; both counts are carried for diagnosis.
class NullityMismatch : public Error {
 public:
  NullityMismatch(int exact_kappa, int float_kappa, const std::string& what)
      : Error(what), exact_(exact_kappa), float_(float_kappa) {}

  int exact_kappa() const noexcept { return exact_; }
  int float_kappa() const noexcept { return float_; }

 private:
  int exact_ = 0;
  int float_ = 0;
};

}  // namespace genergy
