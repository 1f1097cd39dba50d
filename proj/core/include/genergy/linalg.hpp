#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genergy/sym_matrix.hpp"

namespace genergy {

// Eigenvalues of a symmetric matrix, sorted nonincreasing, together with
// the per-eigenvalue zero classification the nullity-aware bounds rely on.
//
// zero_mask[i] marks values[i] as an exact zero of the matrix: masked
// entries contribute nothing to energy or to the rank product.  On the
// integer-exact path the mask count equals the Bareiss rank deficiency;
// on the floating path it is the count of |lambda| <= zero_tol.
struct Spectrum {
  std::vector<double> values;
  std::vector<bool> zero_mask;
  double zero_tol = 0.0;
  double source_frobenius_sq = 0.0;
  bool exact_nullity = false;

  int order() const noexcept { return int(values.size()); }
  int nullity() const;
  double largest() const;
};

struct EigenOptions {
  // Overrides the floating-path zero tolerance (default
  // 1e-8 * max(1, ||M||_F)).  Integer-exact input keeps the exact rank
  // decision regardless of this setting.
  std::optional<double> zero_tol;
};

// Cyclic Jacobi eigensolver.  Eigenvalues carry an absolute error of at
// most 1e-10 * max(1, ||M||_F); iteration stops once the off-diagonal
// Frobenius norm falls below 1e-13 * max(1, ||M||_F) and throws
// ConvergenceError if 64 sweeps do not get there.  Throws
// NullityMismatch when integer-exact input yields a floating zero count
// that cannot be reconciled with the exact rank.  If the fraction-free
// rank computation itself overflows 128-bit arithmetic the zero mask
// falls back to the floating tolerance (exact_nullity stays false).
Spectrum eigen_symmetric(const SymMatrix& m, const EigenOptions& opts = {});

// Sum of squared entries; equals 2m for an adjacency matrix.
double frobenius_sq(const SymMatrix& m);

// x'Mx / x'x.  Throws DomainError when x is zero or of the wrong size.
double rayleigh(const SymMatrix& m, std::span<const double> x);

// Coefficients of det(xI - M) in ascending order: c[0] + c[1] x + ... +
// c[n] x^n with c[n] = 1.  Integer-exact input is expanded by the exact
// Faddeev-LeVerrier recurrence (coefficients beyond 2^53 round on
// conversion); floating input is expanded from the computed eigenvalues,
// so coefficient k inherits an error on the order of the eigenvalue
// error amplified by C(n, k) * max|lambda|^k.  Intended for desk-scale
// matrices.
std::vector<double> char_poly(const SymMatrix& m);

// Exact integer coefficients; requires integer_exact().  Throws
// OverflowError naming the coefficient index when an intermediate or a
// coefficient leaves the checked range.
std::vector<std::int64_t> char_poly_exact(const SymMatrix& m);

// k-th elementary symmetric function of the eigenvalues,
// Upsilon_k = (-1)^k c[n-k].  Requires 0 <= k <= n.
double upsilon(const SymMatrix& m, int k);
std::int64_t upsilon_exact(const SymMatrix& m, int k);

// Sum of all k x k principal minors, computed by direct enumeration with
// per-minor fraction-free (integer) or partially pivoted (floating)
// elimination.  Agrees with upsilon(m, k); meant as an independent
// cross-check and refused for n > 20.
double principal_minor_sum_oracle(const SymMatrix& m, int k);
std::int64_t principal_minor_sum_oracle_exact(const SymMatrix& m, int k);

struct NullityResult {
  int kappa = 0;
  double zero_tol_used = 0.0;
  bool exact = false;
};

// Multiplicity of the eigenvalue 0.  Integer-exact input is answered by
// Bareiss elimination cross-checked against the spectral zero count;
// floating input by the spectral count alone.
NullityResult nullity(const SymMatrix& m, const EigenOptions& opts = {});

// Product of the unmasked eigenvalues: Upsilon_{n - kappa} up to the
// floating error of the eigenvalues.  Throws DomainError when every
// eigenvalue is masked.
double upsilon_rank(const Spectrum& s);

// Rank over the rationals via fraction-free elimination on the integer
// payload; requires integer_exact().
int exact_rank(const SymMatrix& m);

}  // namespace genergy
