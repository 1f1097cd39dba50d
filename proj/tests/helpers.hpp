#pragma once

// Seeded corpus generators shared by the unit and acceptance suites.
// Everything is deterministic: same seed, same corpus, on every platform,
// because only the fixed-width engine std::mt19937 is used (no
// distribution objects, whose streams are implementation defined).

#include <cstdint>
#include <random>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/sym_matrix.hpp"

namespace genergy::testing {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return lo + int(rng() % std::uint32_t(hi - lo + 1));
}

// Bernoulli(p) with 20-bit resolution, deterministic across platforms.
inline bool coin(std::mt19937& rng, double p) {
  return double(rng() % 1048576u) < p * 1048576.0;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng, p)) g.add_edge(i, j);
  return g;
}

// Random tree (each vertex hooks onto an earlier one) plus extra edges,
// so the result is connected by construction.
inline Graph random_connected_graph(std::mt19937& rng, int n, double extra) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(pick(rng, 0, v - 1), v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j) && coin(rng, extra)) g.add_edge(i, j);
  return g;
}

inline SymMatrix random_integer_symmetric(std::mt19937& rng, int n, int lo,
                                          int hi) {
  std::vector<std::vector<std::int64_t>> rows(
      std::size_t(n), std::vector<std::int64_t>(std::size_t(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const std::int64_t v = pick(rng, lo, hi);
      rows[std::size_t(i)][std::size_t(j)] = v;
      rows[std::size_t(j)][std::size_t(i)] = v;
    }
  return SymMatrix::from_integer_rows(rows);
}

inline SymMatrix random_real_symmetric(std::mt19937& rng, int n) {
  std::vector<std::vector<double>> rows(
      std::size_t(n), std::vector<double>(std::size_t(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = (double(rng() % 2000001u) - 1000000.0) / 250000.0;
      rows[std::size_t(i)][std::size_t(j)] = v;
      rows[std::size_t(j)][std::size_t(i)] = v;
    }
  return SymMatrix::from_rows(rows);
}

}  // namespace genergy::testing
