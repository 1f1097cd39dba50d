#include "genergy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "checked_arith.hpp"
#include "genergy/errors.hpp"
#include "jacobi.hpp"

namespace genergy {

namespace {

// Off-diagonal stopping threshold and the zero/reconciliation scales,
// all relative to max(1, ||M||_F).
constexpr double kOffStopScale = 1e-13;
constexpr double kDefaultZeroScale = 1e-8;
constexpr double kReconcileScale = 1e-6;
constexpr double kMomentCheckScale = 1e-8;
constexpr int kMinorOracleMaxOrder = 20;

double scale_of(double x) { return std::max(1.0, x); }

struct Elimination {
  int rank = 0;
  detail::int128 det = 0;  // meaningful only when rank equals the order
};

// Fraction-free elimination with full pivoting on the largest remaining
// entry.  Column swaps only flip the determinant sign, so they are safe
// for both rank and determinant.
Elimination bareiss(std::vector<detail::int128> w, int n) {
  int sign = 1;
  detail::int128 prev = 1;
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    detail::int128 best = 0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        detail::int128 v = w[std::size_t(i) * n + j];
        if (v < 0) v = -v;
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    if (pr != k) {
      for (int j = 0; j < n; ++j)
        std::swap(w[std::size_t(pr) * n + j], w[std::size_t(k) * n + j]);
      sign = -sign;
    }
    if (pc != k) {
      for (int i = 0; i < n; ++i)
        std::swap(w[std::size_t(i) * n + pc], w[std::size_t(i) * n + k]);
      sign = -sign;
    }
    const detail::int128 piv = w[std::size_t(k) * n + k];
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const detail::int128 num = detail::checked_sub(
            detail::checked_mul(w[std::size_t(i) * n + j], piv,
                                "fraction-free elimination"),
            detail::checked_mul(w[std::size_t(i) * n + k],
                                w[std::size_t(k) * n + j],
                                "fraction-free elimination"),
            "fraction-free elimination");
        if (num % prev != 0)
          throw Error("internal: inexact division in fraction-free elimination");
        w[std::size_t(i) * n + j] = num / prev;
      }
    for (int i = k + 1; i < n; ++i) w[std::size_t(i) * n + k] = 0;
    prev = piv;
    ++rank;
  }
  Elimination out;
  out.rank = rank;
  if (rank == n) out.det = sign < 0 ? -prev : prev;
  return out;
}

std::vector<detail::int128> to_i128(std::span<const std::int64_t> ints) {
  return {ints.begin(), ints.end()};
}

// Exact Faddeev-LeVerrier recurrence; returns ascending coefficients of
// det(xI - M).  The division by the step index is exact for integer
// input, which is asserted.
std::vector<detail::int128> char_poly_i128(const SymMatrix& m) {
  const int n = m.order();
  const std::vector<detail::int128> a = to_i128(m.integer_data());
  std::vector<detail::int128> c(std::size_t(n) + 1, 0);
  c[n] = 1;

  std::vector<detail::int128> b = a;
  {
    detail::int128 tr = 0;
    for (int i = 0; i < n; ++i)
      tr = detail::checked_add(tr, b[std::size_t(i) * n + i],
                               "characteristic polynomial coefficient c[n-1]");
    c[n - 1] = -tr;
  }

  std::vector<detail::int128> next(std::size_t(n) * n);
  for (int k = 2; k <= n; ++k) {
    const std::string what =
        "characteristic polynomial coefficient c[" + std::to_string(n - k) + "]";
    for (int i = 0; i < n; ++i)
      b[std::size_t(i) * n + i] =
          detail::checked_add(b[std::size_t(i) * n + i], c[n - k + 1], what.c_str());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        detail::int128 sum = 0;
        for (int l = 0; l < n; ++l)
          sum = detail::checked_add(
              sum,
              detail::checked_mul(a[std::size_t(i) * n + l],
                                  b[std::size_t(l) * n + j], what.c_str()),
              what.c_str());
        next[std::size_t(i) * n + j] = sum;
      }
    b.swap(next);
    detail::int128 tr = 0;
    for (int i = 0; i < n; ++i)
      tr = detail::checked_add(tr, b[std::size_t(i) * n + i], what.c_str());
    if (tr % k != 0)
      throw Error("internal: inexact trace division in the characteristic "
                  "polynomial recurrence");
    c[n - k] = -(tr / k);
  }
  return c;
}

double det_double(std::vector<double> w, int k) {
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int i = col + 1; i < k; ++i)
      if (std::abs(w[std::size_t(i) * k + col]) >
          std::abs(w[std::size_t(piv) * k + col]))
        piv = i;
    if (w[std::size_t(piv) * k + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < k; ++j)
        std::swap(w[std::size_t(piv) * k + j], w[std::size_t(col) * k + j]);
      det = -det;
    }
    const double p = w[std::size_t(col) * k + col];
    det *= p;
    for (int i = col + 1; i < k; ++i) {
      const double f = w[std::size_t(i) * k + col] / p;
      if (f == 0.0) continue;
      for (int j = col; j < k; ++j)
        w[std::size_t(i) * k + j] -= f * w[std::size_t(col) * k + j];
    }
  }
  return det;
}

void check_minor_args(const SymMatrix& m, int k) {
  const int n = m.order();
  if (n > kMinorOracleMaxOrder)
    throw DomainError("minor-sum enumeration refused for order " +
                      std::to_string(n) + " (> " +
                      std::to_string(kMinorOracleMaxOrder) +
                      "): it is a cross-check, not a production path");
  if (k < 0 || k > n)
    throw DomainError("minor order " + std::to_string(k) +
                      " out of range for order " + std::to_string(n));
}

// Walks all k-subsets of 0..n-1 in lexicographic order.
bool next_subset(std::vector<int>& idx, int n) {
  const int k = int(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

detail::int128 minor_sum_i128(const SymMatrix& m, int k) {
  if (k == 0) return 1;
  const int n = m.order();
  const auto ints = m.integer_data();
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  detail::int128 total = 0;
  std::vector<detail::int128> sub(std::size_t(k) * k);
  do {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub[std::size_t(i) * k + j] =
            ints[std::size_t(idx[i]) * m.order() + idx[j]];
    total = detail::checked_add(total, bareiss(sub, k).det,
                                "principal minor sum");
  } while (next_subset(idx, n));
  return total;
}

double minor_sum_double(const SymMatrix& m, int k) {
  if (k == 0) return 1.0;
  const int n = m.order();
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  double total = 0.0;
  std::vector<double> sub(std::size_t(k) * k);
  do {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[std::size_t(i) * k + j] = m(idx[i], idx[j]);
    total += det_double(sub, k);
  } while (next_subset(idx, n));
  return total;
}

void check_upsilon_args(const SymMatrix& m, int k) {
  if (k < 0 || k > m.order())
    throw DomainError("symmetric function order " + std::to_string(k) +
                      " out of range for matrix order " +
                      std::to_string(m.order()));
}

}  // namespace

int Spectrum::nullity() const {
  return int(std::count(zero_mask.begin(), zero_mask.end(), true));
}

double Spectrum::largest() const {
  if (values.empty()) throw DomainError("empty spectrum");
  return values.front();
}

double frobenius_sq(const SymMatrix& m) {
  double sum = 0.0;
  for (double v : m.data()) sum += v * v;
  return sum;
}

double rayleigh(const SymMatrix& m, std::span<const double> x) {
  const int n = m.order();
  if (int(x.size()) != n)
    throw DomainError("test vector has size " + std::to_string(x.size()) +
                      ", expected " + std::to_string(n));
  double xx = 0.0;
  for (double v : x) xx += v * v;
  if (xx == 0.0) throw DomainError("test vector is zero");
  double xmx = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += m(i, j) * x[j];
    xmx += x[i] * row;
  }
  return xmx / xx;
}

int exact_rank(const SymMatrix& m) {
  return bareiss(to_i128(m.integer_data()), m.order()).rank;
}

Spectrum eigen_symmetric(const SymMatrix& m, const EigenOptions& opts) {
  const int n = m.order();
  const double fsq = frobenius_sq(m);
  const double frob = std::sqrt(fsq);

  std::vector<double> a(m.data().begin(), m.data().end());
  detail::jacobi_cycle(a, n, kOffStopScale * scale_of(frob), nullptr);

  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = a[std::size_t(i) * n + i];
  std::sort(vals.begin(), vals.end(), std::greater<>());

  double sumsq = 0.0;
  for (double v : vals) sumsq += v * v;
  if (std::abs(sumsq - fsq) > kMomentCheckScale * scale_of(fsq))
    throw Error("internal: eigenvalue second moment " + std::to_string(sumsq) +
                " drifted from the squared Frobenius norm " +
                std::to_string(fsq));

  Spectrum s;
  s.values = std::move(vals);
  s.zero_mask.assign(std::size_t(n), false);
  s.source_frobenius_sq = fsq;

  const double default_tol = kDefaultZeroScale * scale_of(frob);
  std::optional<int> exact_kappa;
  if (m.integer_exact()) {
    // The exact rank decides when the fraction-free elimination fits in
    // 128-bit arithmetic; on overflow (huge entries or large order) the
    // floating tolerance below takes over.
    try {
      exact_kappa = m.order() - exact_rank(m);
    } catch (const OverflowError&) {
      exact_kappa.reset();
    }
  }
  if (exact_kappa) {
    s.zero_tol = default_tol;
    s.exact_nullity = true;
    const int kappa = *exact_kappa;
    std::vector<int> by_modulus(std::size_t(n), 0);
    std::iota(by_modulus.begin(), by_modulus.end(), 0);
    std::stable_sort(by_modulus.begin(), by_modulus.end(), [&](int l, int r) {
      return std::abs(s.values[l]) < std::abs(s.values[r]);
    });
    const double guard = kReconcileScale * scale_of(frob);
    for (int i = 0; i < kappa; ++i) {
      const int idx = by_modulus[i];
      if (std::abs(s.values[idx]) > guard) {
        int float_count = 0;
        for (double v : s.values)
          if (std::abs(v) <= default_tol) ++float_count;
        throw NullityMismatch(
            kappa, float_count,
            "exact nullity " + std::to_string(kappa) +
                " would mask eigenvalue " + std::to_string(s.values[idx]) +
                ", far outside the zero band (floating count " +
                std::to_string(float_count) + ")");
      }
      s.zero_mask[idx] = true;
    }
  } else {
    double tol = default_tol;
    if (opts.zero_tol) {
      if (*opts.zero_tol < 0.0)
        throw DomainError("zero tolerance must be nonnegative");
      tol = *opts.zero_tol;
    }
    s.zero_tol = tol;
    for (int i = 0; i < n; ++i) s.zero_mask[i] = std::abs(s.values[i]) <= tol;
  }
  return s;
}

NullityResult nullity(const SymMatrix& m, const EigenOptions& opts) {
  const Spectrum s = eigen_symmetric(m, opts);
  return {s.nullity(), s.zero_tol, s.exact_nullity};
}

std::vector<double> char_poly(const SymMatrix& m) {
  const int n = m.order();
  if (m.integer_exact()) {
    const auto c = char_poly_i128(m);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = double(c[i]);
    return out;
  }
  const Spectrum s = eigen_symmetric(m);
  std::vector<double> poly{1.0};
  poly.reserve(std::size_t(n) + 1);
  for (double lam : s.values) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= lam * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<std::int64_t> char_poly_exact(const SymMatrix& m) {
  if (!m.integer_exact())
    throw DomainError("exact characteristic polynomial needs integer input");
  const auto c = char_poly_i128(m);
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i] = detail::narrow_i64(
        c[i], "characteristic polynomial coefficient c[" + std::to_string(i) + "]");
  return out;
}

double upsilon(const SymMatrix& m, int k) {
  check_upsilon_args(m, k);
  const int n = m.order();
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  if (m.integer_exact()) {
    const auto c = char_poly_i128(m);
    return sign * double(c[std::size_t(n - k)]);
  }
  const auto c = char_poly(m);
  return sign * c[std::size_t(n - k)];
}

std::int64_t upsilon_exact(const SymMatrix& m, int k) {
  check_upsilon_args(m, k);
  if (!m.integer_exact())
    throw DomainError("exact symmetric function needs integer input");
  const auto c = char_poly_i128(m);
  const detail::int128 v = c[std::size_t(m.order() - k)];
  return detail::narrow_i64((k % 2 == 0) ? v : -v,
                            "symmetric function of order " + std::to_string(k));
}

double principal_minor_sum_oracle(const SymMatrix& m, int k) {
  check_minor_args(m, k);
  if (m.integer_exact()) return double(minor_sum_i128(m, k));
  return minor_sum_double(m, k);
}

std::int64_t principal_minor_sum_oracle_exact(const SymMatrix& m, int k) {
  check_minor_args(m, k);
  if (!m.integer_exact())
    throw DomainError("exact minor sum needs integer input");
  return detail::narrow_i64(minor_sum_i128(m, k),
                            "principal minor sum of order " + std::to_string(k));
}

double upsilon_rank(const Spectrum& s) {
  double prod = 1.0;
  bool any = false;
  for (int i = 0; i < s.order(); ++i) {
    if (s.zero_mask[i]) continue;
    prod *= s.values[i];
    any = true;
  }
  if (!any)
    throw DomainError("all eigenvalues are zero; the rank product is undefined");
  return prod;
}

}  // namespace genergy
