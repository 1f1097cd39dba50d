#include "genergy/sym_matrix.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

std::size_t checked_order(std::size_t rows) {
  if (rows == 0) throw DomainError("symmetric matrix needs order >= 1");
  return rows;
}

}  // namespace

SymMatrix::SymMatrix(int n, std::vector<double> entries,
                     std::vector<std::int64_t> ints)
    : n_(n), entries_(std::move(entries)), ints_(std::move(ints)) {}

SymMatrix SymMatrix::zero(int n) {
  if (n < 1) throw DomainError("symmetric matrix needs order >= 1");
  return SymMatrix(n, std::vector<double>(std::size_t(n) * n, 0.0),
                   std::vector<std::int64_t>(std::size_t(n) * n, 0));
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = int(checked_order(rows.size()));
  std::vector<double> entries(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != n)
      throw DomainError("row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!std::isfinite(v))
        throw DomainError("entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") is not finite");
      entries[std::size_t(i) * n + j] = v;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (entries[std::size_t(i) * n + j] != entries[std::size_t(j) * n + i])
        throw DomainError("entries (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") and (" + std::to_string(j) +
                          ", " + std::to_string(i) + ") differ");

  std::vector<std::int64_t> ints;
  bool integral = true;
  for (double v : entries) {
    if (std::nearbyint(v) != v || std::abs(v) > kExactIntegerLimit) {
      integral = false;
      break;
    }
  }
  if (integral) {
    ints.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
      ints[i] = std::int64_t(entries[i]);
  }
  return SymMatrix(n, std::move(entries), std::move(ints));
}

SymMatrix SymMatrix::from_integer_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = int(checked_order(rows.size()));
  std::vector<std::int64_t> ints(std::size_t(n) * n);
  std::vector<double> entries(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != n)
      throw DomainError("row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const std::int64_t v = rows[i][j];
      if (double(v) > kExactIntegerLimit || double(v) < -kExactIntegerLimit)
        throw DomainError("entry (" + std::to_string(i) + ", " +
                          std::to_string(j) +
                          ") exceeds the exactly representable range");
      ints[std::size_t(i) * n + j] = v;
      entries[std::size_t(i) * n + j] = double(v);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ints[std::size_t(i) * n + j] != ints[std::size_t(j) * n + i])
        throw DomainError("entries (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") and (" + std::to_string(j) +
                          ", " + std::to_string(i) + ") differ");
  return SymMatrix(n, std::move(entries), std::move(ints));
}

std::int64_t SymMatrix::integer_at(int i, int j) const {
  if (!integer_exact())
    throw DomainError("matrix has no exact integer payload");
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw DomainError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range for order " + std::to_string(n_));
  return ints_[std::size_t(i) * n_ + j];
}

std::span<const std::int64_t> SymMatrix::integer_data() const {
  if (!integer_exact())
    throw DomainError("matrix has no exact integer payload");
  return ints_;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const int> indices) const {
  const int k = int(indices.size());
  if (k < 1) throw DomainError("principal submatrix needs at least one index");
  for (int idx : indices)
    if (idx < 0 || idx >= n_)
      throw DomainError("submatrix index " + std::to_string(idx) +
                        " out of range for order " + std::to_string(n_));
  std::vector<double> entries(std::size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      entries[std::size_t(i) * k + j] =
          entries_[std::size_t(indices[i]) * n_ + indices[j]];
  std::vector<std::int64_t> ints;
  if (integer_exact()) {
    ints.resize(std::size_t(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        ints[std::size_t(i) * k + j] =
            ints_[std::size_t(indices[i]) * n_ + indices[j]];
  }
  return SymMatrix(k, std::move(entries), std::move(ints));
}

}  // namespace genergy
