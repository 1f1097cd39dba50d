#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genergy/graph.hpp"
#include "genergy/linalg.hpp"

namespace genergy {

enum class CertificateKind {
  equal_moduli,           // all nonzero eigenvalues share one modulus
  unit_moduli,            // all nonzero eigenvalues below the largest are +-1
  bipartite_union,        // union of complete bipartite graphs, equal products
  clique_matching_union,  // one clique plus a perfect matching part plus
                          // isolated vertices
};
const char* to_string(CertificateKind k);

// Evidence that one of the report bounds is attained.  `bound` names the
// report column the certificate speaks for, and `residual` is
// energy - bound recomputed from the same spectrum (tiny by
// construction).  The structural fields are filled by the graph
// matchers: bipartite_parts for bipartite_union, and the
// (n, ell, kappa) parameters with the component tally for
// clique_matching_union (clique_order 0 means the all-matching family).
struct EqualityCertificate {
  CertificateKind kind;
  std::string bound;
  double residual = 0.0;
  std::vector<std::pair<int, int>> bipartite_parts;
  int n = 0;
  int ell = 0;
  int kappa = 0;
  int clique_order = 0;
  int matchings = 0;
  int isolated = 0;
};

// Modulus-equality certificate (tolerance 1e-8 relative).  With
// irreducible = true the spectrum must additionally show exactly two
// nonzero eigenvalues +-rho and nullity n - 2, the shape forced for
// irreducible nonnegative input; a violation throws DomainError since it
// means the input was not irreducible nonnegative.
std::optional<EqualityCertificate> certify_equal_moduli(
    const Spectrum& s, bool irreducible = false);

// All unmasked eigenvalues except the largest have modulus within 1e-8
// of 1.
std::optional<EqualityCertificate> certify_unit_moduli(const Spectrum& s);

// Disjoint unions of complete bipartite graphs K_{a_j, b_j} whose
// products a_j b_j all agree; single vertices disqualify.  Purely
// structural except for the residual.
std::optional<EqualityCertificate> match_bipartite_union(const Graph& g);

// At most one clique K_q (q >= 3), any number of single edges, any
// number of isolated vertices; or, with no clique, at least one single
// edge.  Purely structural except for the residual.
std::optional<EqualityCertificate> match_clique_matching_union(const Graph& g);

enum class WitnessKind {
  path_submatrix,   // zero-diagonal path pattern with sqrt(a^2+b^2) > 1
  rayleigh_triple,  // zero-diagonal 3x3 block with smallest eigenvalue < -1
};
const char* to_string(WitnessKind k);

// Strictness witness for the logarithmic bounds: a principal 3x3
// submatrix whose presence forces the bound to be strict.  indices are
// (end, middle, end) for the path pattern and ascending for the triple;
// `vector` is the unit eigenvector of the smallest eigenvalue in the
// triple case; `violated` is sqrt(a^2 + b^2) or that smallest
// eigenvalue.
struct StrictnessWitness {
  WitnessKind kind;
  std::array<int, 3> indices{};
  double a = 0.0, b = 0.0, c = 0.0;
  std::array<double, 3> vector{};
  double violated = 0.0;
  std::string note;
};

// Scans index triples in lexicographic order (middles in ascending
// index order within a triple, path pattern before triple pattern) and
// returns the first witness.  `probes` caps the number of triples
// examined, so large orders degrade to a deterministic prefix scan.
std::optional<StrictnessWitness> find_strictness_witness(
    const SymMatrix& m, long probes = 2'000'000);

}  // namespace genergy
