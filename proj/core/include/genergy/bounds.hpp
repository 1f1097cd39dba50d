#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/linalg.hpp"

namespace genergy {

// Sum of |lambda| over the unmasked eigenvalues; masked entries are
// treated as exact zeros.
double energy(const Spectrum& s);

// One spectral pass shared by every bound evaluation of a matrix: the
// spectrum, the nullity, and |Upsilon_{n - kappa}| (exact on the integer
// path, the unmasked eigenvalue product otherwise).
struct SpectralSummary {
  Spectrum spectrum;
  int n = 0;
  int kappa = 0;
  double rho = 0.0;
  double frobenius_sq = 0.0;
  double abs_upsilon_rank = 0.0;
  bool upsilon_exact = false;
  double energy_value = 0.0;
};
SpectralSummary summarize(const SymMatrix& m, const EigenOptions& opts = {});

// sqrt(frob_sq + r(r-1) |Upsilon_r|^(2/r)) with r = n - kappa.
// Every Frobenius-type bound evaluates through here, so coinciding
// parameters give bit-identical values.
double frobenius_type_bound(double frob_sq, int n_minus_kappa,
                            double abs_upsilon);

// mu + (n - kappa - 1) + ln|Upsilon_{n-kappa}| - ln(mu), the shared shape
// of the logarithmic bounds.  Requires mu > 0 and abs_upsilon > 0.
double log_type_bound(double mu, int n, int kappa, double abs_upsilon);

// 2 sqrt(m); defined for m >= 1.
std::optional<double> bound_caporossi(const Graph& g);

// sqrt(2m + n(n-1) |det A|^(2/n)); det 0 is fine.
double bound_mcclelland(const Graph& g);

// Nullity-aware Frobenius bound; inapplicable when kappa = n.
std::optional<double> bound_nullity_frobenius(const SymMatrix& m);
std::optional<double> bound_nullity_frobenius(const Graph& g);

// Logarithmic bound at mu = rho; needs rho > 0 and kappa < n.
std::optional<double> bound_nullity_log(const SymMatrix& m);
std::optional<double> bound_nullity_log(const Graph& g);

// Logarithmic bound at mu = x'Mx/x'x for a nonnegative test vector;
// inapplicable when mu < 1 or kappa = n.  Throws DomainError if x has a
// negative entry, is zero, or has the wrong size.
std::optional<double> bound_rayleigh_log(const SymMatrix& m,
                                         std::span<const double> x);

// Logarithmic bound at mu = 2 m1 / n1 for one component (n1 >= 2);
// kappa and Upsilon still refer to the whole graph.
std::optional<double> bound_component_log(const Graph& g,
                                          const Component& component);

// Eigenvalue counts (c, f, kappa) = (#(-1), #(+1) below the largest,
// #0) recovered from n, ||R||_F^2 and rho alone.  Applicable only when
// the trace vanishes, rho >= 1, the recovered counts are nonnegative
// near-integers summing to n - 1, and they match the spectrum directly;
// otherwise applicable = false and note says why.
struct SpectralCounts {
  int minus_one = 0;
  int plus_one = 0;
  int kappa = 0;
  bool applicable = false;
  std::string note;
};
SpectralCounts spectral_counts(const SymMatrix& m);

// gamma^(0..k_max) for a connected graph on >= 2 vertices, where
// gamma^(k) = ||A d_k|| / ||d_k|| and d_0 is all-ones.  Computed with a
// normalized floating iteration, so it does not overflow; nondecreasing
// in k and converging to the largest eigenvalue.
std::vector<double> gamma_sequence(const Graph& connected, int k_max);

struct GammaLimit {
  double value = 0.0;
  int steps = 0;
  bool converged = false;
};

// Walks the gamma sequence until successive values differ by less than
// stall_tol or k_max steps are taken.  k_max must be at least 1 so the
// walk always produces a value.
GammaLimit gamma_limit(const Graph& connected, int k_max = 200,
                       double stall_tol = 1e-10);

// Logarithmic bound at mu = gamma^(k) of one component (n1 >= 2, so
// gamma >= 1); kappa and Upsilon refer to the whole graph.  Inapplicable
// when kappa = n or the component is a single vertex.
std::optional<double> bound_gamma_log(const Graph& g,
                                      const Component& component, int k);

struct BoundEntry {
  std::string name;
  std::optional<double> value;
  bool applicable = false;
  std::string note;
};

// Report column order; ties on value resolve to the earlier name.
inline constexpr std::array<const char*, 7> kBoundNames = {
    "caporossi",     "mcclelland",    "nullity_frobenius", "nullity_log",
    "rayleigh_log",  "component_log", "gamma_log"};

struct BoundReport {
  std::string id;
  int n = 0;
  int m = 0;
  int kappa = 0;
  double rho = 0.0;
  double energy_value = 0.0;
  std::vector<BoundEntry> entries;
  std::string winner;  // empty when nothing is applicable

  const BoundEntry* find(std::string_view name) const;
  // energy - value for an applicable entry, nullopt otherwise.
  std::optional<double> gap(std::string_view name) const;
};

struct SurveyOptions {
  int gamma_k_max = 200;
  std::optional<double> zero_tol;
};

// Evaluates every bound on one shared spectral pass.  The rayleigh_log
// row uses the all-ones test vector (mu = 2m/n); component_log takes the
// best eligible component; gamma_log follows the component carrying the
// largest eigenvalue, iterated to the gamma_limit stopping rule.  Throws
// Error if an applicable bound exceeds energy beyond round-off, which
// would mean an internal inconsistency.
BoundReport survey(const Graph& g, const SurveyOptions& opts = {});

}  // namespace genergy
