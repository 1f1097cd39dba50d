#pragma once

#include <vector>

namespace genergy::detail {

// Frobenius norm of the off-diagonal part of a row-major symmetric
// matrix.
double offdiag_norm(const std::vector<double>& a, int n);

// Cyclic Jacobi.  `a` is a row-major symmetric matrix of order n; on
// return its diagonal holds the eigenvalues (unsorted) and the
// off-diagonal norm is at most off_stop.  If `vectors` is non-null it is
// resized to n*n and accumulates the rotations, so its columns end up as
// the matching eigenvectors.  Throws ConvergenceError if max_sweeps
// cyclic sweeps do not reach off_stop.
void jacobi_cycle(std::vector<double>& a, int n, double off_stop,
                  std::vector<double>* vectors, int max_sweeps = 64);

}  // namespace genergy::detail
