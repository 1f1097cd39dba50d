#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace genergy {

// Dense real symmetric matrix of order n >= 1.
//
// Symmetry is enforced exactly at construction (bitwise equal mirrored
// entries) and entries must be finite.  When every entry is integral and
// no larger than 2^53 in magnitude, an exact int64 payload is kept next
// to the doubles; adjacency matrices always take that path, and the exact
// routines (Bareiss rank, integer characteristic polynomial, minor sums)
// require it.
class SymMatrix {
 public:
  static SymMatrix zero(int n);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
  static SymMatrix from_integer_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  int order() const noexcept { return n_; }

  double operator()(int i, int j) const {
    return entries_[std::size_t(i) * n_ + j];
  }

  bool integer_exact() const noexcept { return !ints_.empty(); }
  std::int64_t integer_at(int i, int j) const;

  // Row-major n*n entry block.
  std::span<const double> data() const noexcept { return entries_; }
  std::span<const std::int64_t> integer_data() const;

  SymMatrix principal_submatrix(std::span<const int> indices) const;

 private:
  SymMatrix(int n, std::vector<double> entries, std::vector<std::int64_t> ints);

  int n_ = 0;
  std::vector<double> entries_;
  std::vector<std::int64_t> ints_;
};

}  // namespace genergy
