#include "genergy/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <string>

#include "genergy/bounds.hpp"
#include "genergy/errors.hpp"
#include "jacobi.hpp"

namespace genergy {

namespace {

constexpr double kModulusTol = 1e-8;

double unmasked_modulus_product(const Spectrum& s) {
  double prod = 1.0;
  for (int i = 0; i < s.order(); ++i)
    if (!s.zero_mask[i]) prod *= std::abs(s.values[i]);
  return prod;
}

}  // namespace

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::equal_moduli: return "equal_moduli";
    case CertificateKind::unit_moduli: return "unit_moduli";
    case CertificateKind::bipartite_union: return "bipartite_union";
    case CertificateKind::clique_matching_union: return "clique_matching_union";
  }
  return "unknown";
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::path_submatrix: return "path_submatrix";
    case WitnessKind::rayleigh_triple: return "rayleigh_triple";
  }
  return "unknown";
}

std::optional<EqualityCertificate> certify_equal_moduli(const Spectrum& s,
                                                        bool irreducible) {
  int nonzero = 0;
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < s.order(); ++i) {
    if (s.zero_mask[i]) continue;
    const double mod = std::abs(s.values[i]);
    if (nonzero == 0) {
      lo = hi = mod;
    } else {
      lo = std::min(lo, mod);
      hi = std::max(hi, mod);
    }
    ++nonzero;
  }
  if (nonzero == 0) return std::nullopt;
  if (hi - lo > kModulusTol * hi) return std::nullopt;

  if (irreducible) {
    const bool profile =
        nonzero == 2 && s.nullity() == s.order() - 2 &&
        s.values.front() > 0.0 &&
        std::abs(s.values.front() + s.values.back()) <= kModulusTol * hi;
    if (!profile)
      throw DomainError(
          "equal moduli hold but the two-eigenvalue profile (+rho, -rho, "
          "nullity n-2) does not; the input cannot have been irreducible "
          "nonnegative");
  }

  EqualityCertificate cert;
  cert.kind = CertificateKind::equal_moduli;
  cert.bound = "nullity_frobenius";
  cert.n = s.order();
  cert.kappa = s.nullity();
  const double bound = frobenius_type_bound(
      s.source_frobenius_sq, s.order() - s.nullity(), unmasked_modulus_product(s));
  cert.residual = energy(s) - bound;
  return cert;
}

std::optional<EqualityCertificate> certify_unit_moduli(const Spectrum& s) {
  if (s.order() == 0 || s.zero_mask.front()) return std::nullopt;
  const double rho = s.values.front();
  if (rho <= 0.0) return std::nullopt;
  for (int i = 1; i < s.order(); ++i) {
    if (s.zero_mask[i]) continue;
    if (std::abs(std::abs(s.values[i]) - 1.0) > kModulusTol)
      return std::nullopt;
  }
  EqualityCertificate cert;
  cert.kind = CertificateKind::unit_moduli;
  cert.bound = "nullity_log";
  cert.n = s.order();
  cert.kappa = s.nullity();
  const double bound = log_type_bound(rho, s.order(), s.nullity(),
                                      unmasked_modulus_product(s));
  cert.residual = energy(s) - bound;
  return cert;
}

std::optional<EqualityCertificate> match_bipartite_union(const Graph& g) {
  const std::vector<Component> comps = components(g);
  if (comps.empty()) return std::nullopt;

  std::vector<std::pair<int, int>> parts;
  long long product = -1;
  for (const Component& c : comps) {
    const int n1 = c.graph.order();
    if (n1 < 2) return std::nullopt;  // isolated vertices disqualify
    std::vector<int> side(std::size_t(n1), -1);
    std::queue<int> queue;
    side[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : c.graph.neighbors(v)) {
        if (side[std::size_t(w)] < 0) {
          side[std::size_t(w)] = 1 - side[std::size_t(v)];
          queue.push(w);
        } else if (side[std::size_t(w)] == side[std::size_t(v)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
    const int a = int(std::count(side.begin(), side.end(), 0));
    const int b = n1 - a;
    if (std::int64_t(c.graph.size()) != std::int64_t(a) * b)
      return std::nullopt;  // bipartite but not complete bipartite
    if (product < 0)
      product = (long long)(a)*b;
    else if (product != (long long)(a)*b)
      return std::nullopt;  // products must agree across components
    parts.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(parts.begin(), parts.end());

  EqualityCertificate cert;
  cert.kind = CertificateKind::bipartite_union;
  cert.bound = "nullity_frobenius";
  cert.bipartite_parts = std::move(parts);
  cert.n = g.order();
  cert.ell = int(comps.size());
  cert.kappa = g.order() - 2 * int(comps.size());

  const SpectralSummary s = summarize(g.adjacency());
  if (s.kappa != cert.kappa)
    throw Error("internal: structural nullity " + std::to_string(cert.kappa) +
                " disagrees with the spectral nullity " +
                std::to_string(s.kappa));
  cert.residual =
      s.energy_value - frobenius_type_bound(s.frobenius_sq, s.n - s.kappa,
                                            s.abs_upsilon_rank);
  return cert;
}

std::optional<EqualityCertificate> match_clique_matching_union(const Graph& g) {
  const std::vector<Component> comps = components(g);
  int clique_order = 0;
  int matchings = 0;
  int isolated = 0;
  for (const Component& c : comps) {
    const int n1 = c.graph.order();
    if (n1 == 1) {
      ++isolated;
    } else if (n1 == 2) {
      ++matchings;
    } else {
      if (std::int64_t(c.graph.size()) != std::int64_t(n1) * (n1 - 1) / 2)
        return std::nullopt;  // not a clique
      if (clique_order != 0) return std::nullopt;  // at most one clique
      clique_order = n1;
    }
  }
  if (clique_order == 0 && matchings == 0) return std::nullopt;

  EqualityCertificate cert;
  cert.kind = CertificateKind::clique_matching_union;
  cert.bound = "nullity_log";
  cert.n = g.order();
  cert.ell = g.order() - clique_order;
  cert.kappa = isolated;
  cert.clique_order = clique_order;
  cert.matchings = matchings;
  cert.isolated = isolated;

  const SpectralSummary s = summarize(g.adjacency());
  if (s.kappa != cert.kappa)
    throw Error("internal: structural nullity " + std::to_string(cert.kappa) +
                " disagrees with the spectral nullity " +
                std::to_string(s.kappa));
  cert.residual = s.energy_value - log_type_bound(s.rho, s.n, s.kappa,
                                                  s.abs_upsilon_rank);
  return cert;
}

namespace {

std::optional<StrictnessWitness> probe_triple(const SymMatrix& m, int i, int j,
                                              int k) {
  if (m(i, i) != 0.0 || m(j, j) != 0.0 || m(k, k) != 0.0) return std::nullopt;
  const double xij = m(i, j), xik = m(i, k), xjk = m(j, k);

  struct Arrangement {
    int end1, mid, end2;
    double a, b, corner;
  };
  const Arrangement arrangements[3] = {
      {j, i, k, xij, xik, xjk},
      {i, j, k, xij, xjk, xik},
      {i, k, j, xik, xjk, xij},
  };
  // Fire only with a real margin below -1, so rounding noise on a block
  // whose smallest eigenvalue is exactly -1 (a triangle, say) cannot turn
  // an equality case into a bogus strictness claim.
  constexpr double kStrictMargin = 1e-9;

  for (const Arrangement& arr : arrangements) {
    if (arr.a == 0.0 || arr.b == 0.0 || arr.corner != 0.0) continue;
    const double norm = std::hypot(arr.a, arr.b);
    if (norm > 1.0 + kStrictMargin) {
      StrictnessWitness w;
      w.kind = WitnessKind::path_submatrix;
      w.indices = {arr.end1, arr.mid, arr.end2};
      w.a = arr.a;
      w.b = arr.b;
      w.violated = norm;
      w.note = "zero-diagonal path pattern; the block contributes -sqrt(a^2+b^2)";
      return w;
    }
  }

  // Full zero-diagonal triple: ask the block's smallest eigenvalue, the
  // optimum of the quotient over all test vectors.
  std::vector<double> block = {0.0, xij, xik, xij, 0.0, xjk, xik, xjk, 0.0};
  const double frob = std::sqrt(2.0 * (xij * xij + xik * xik + xjk * xjk));
  std::vector<double> vecs;
  detail::jacobi_cycle(block, 3, 1e-14 * std::max(1.0, frob), &vecs);
  int arg = 0;
  for (int d = 1; d < 3; ++d)
    if (block[std::size_t(d) * 3 + d] < block[std::size_t(arg) * 3 + arg])
      arg = d;
  const double lambda_min = block[std::size_t(arg) * 3 + arg];
  if (lambda_min < -1.0 - kStrictMargin) {
    StrictnessWitness w;
    w.kind = WitnessKind::rayleigh_triple;
    w.indices = {i, j, k};
    w.a = xij;
    w.b = xjk;
    w.c = xik;
    w.vector = {vecs[std::size_t(0) * 3 + arg], vecs[std::size_t(1) * 3 + arg],
                vecs[std::size_t(2) * 3 + arg]};
    int big = 0;
    for (int d = 1; d < 3; ++d)
      if (std::abs(w.vector[std::size_t(d)]) > std::abs(w.vector[std::size_t(big)]))
        big = d;
    if (w.vector[std::size_t(big)] < 0.0)
      for (double& v : w.vector) v = -v;
    w.violated = lambda_min;
    w.note = "smallest block eigenvalue used as the optimal quotient";
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<StrictnessWitness> find_strictness_witness(const SymMatrix& m,
                                                         long probes) {
  if (probes < 0) throw DomainError("probe budget must be nonnegative");
  const int n = m.order();
  long used = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (used >= probes) return std::nullopt;
        ++used;
        if (auto w = probe_triple(m, i, j, k)) return w;
      }
  return std::nullopt;
}

}  // namespace genergy
