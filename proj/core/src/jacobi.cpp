#include "jacobi.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "genergy/errors.hpp"

namespace genergy::detail {

double offdiag_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const double v = a[std::size_t(p) * n + q];
      sum += 2.0 * v * v;
    }
  return std::sqrt(sum);
}

namespace {

void rotate(std::vector<double>& a, int n, int p, int q,
            std::vector<double>* v) {
  const std::size_t N = std::size_t(n);
  const double apq = a[N * p + q];
  if (apq == 0.0) return;

  const double app = a[N * p + p];
  const double aqq = a[N * q + q];
  const double tau = (aqq - app) / (2.0 * apq);
  const double root = std::sqrt(1.0 + tau * tau);
  const double t = tau >= 0.0 ? 1.0 / (tau + root) : 1.0 / (tau - root);
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  a[N * p + p] = app - t * apq;
  a[N * q + q] = aqq + t * apq;
  a[N * p + q] = a[N * q + p] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a[N * i + p];
    const double aiq = a[N * i + q];
    a[N * i + p] = a[N * p + i] = c * aip - s * aiq;
    a[N * i + q] = a[N * q + i] = s * aip + c * aiq;
  }
  if (v) {
    for (int i = 0; i < n; ++i) {
      const double vip = (*v)[N * i + p];
      const double viq = (*v)[N * i + q];
      (*v)[N * i + p] = c * vip - s * viq;
      (*v)[N * i + q] = s * vip + c * viq;
    }
  }
}

}  // namespace

void jacobi_cycle(std::vector<double>& a, int n, double off_stop,
                  std::vector<double>* vectors, int max_sweeps) {
  if (vectors) {
    vectors->assign(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*vectors)[std::size_t(i) * n + i] = 1.0;
  }
  if (n < 2) return;

  // Rotating entries already far below the target just churns; skip them.
  const double skip = off_stop / (4.0 * n * n);
  double off = offdiag_norm(a, n);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off <= off_stop) return;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(a[std::size_t(p) * n + q]) > skip) rotate(a, n, p, q, vectors);
    off = offdiag_norm(a, n);
  }
  if (off <= off_stop) return;
  throw ConvergenceError("eigensolver stalled: off-diagonal norm " +
                         std::to_string(off) + " above target " +
                         std::to_string(off_stop) + " after " +
                         std::to_string(max_sweeps) + " sweeps");
}

}  // namespace genergy::detail
