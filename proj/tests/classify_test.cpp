#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "genergy/bounds.hpp"
#include "genergy/classify.hpp"
#include "genergy/errors.hpp"
#include "genergy/families.hpp"
#include "genergy/graph.hpp"
#include "genergy/linalg.hpp"
#include "helpers.hpp"

using namespace genergy;
namespace gt = genergy::testing;

namespace {

Spectrum spec_of(const Graph& g) { return eigen_symmetric(g.adjacency()); }

}  // namespace

TEST_CASE("equal-moduli certificate fires exactly on flat spectra") {
  // The square has nonzero eigenvalues +-2; bipartite stars likewise.
  const auto c4 = certify_equal_moduli(spec_of(make_cycle(4)));
  REQUIRE(c4.has_value());
  CHECK(c4->kind == CertificateKind::equal_moduli);
  CHECK(std::abs(c4->residual) <= 1e-9);

  const auto star = certify_equal_moduli(spec_of(make_star(6)));
  REQUIRE(star.has_value());
  CHECK(std::abs(star->residual) <= 1e-9);

  CHECK_FALSE(certify_equal_moduli(spec_of(make_path(4))).has_value());
  CHECK_FALSE(certify_equal_moduli(spec_of(make_complete(4))).has_value());
}

TEST_CASE("irreducible mode accepts one positive-negative pair and no more") {
  const auto ok = certify_equal_moduli(spec_of(make_complete_bipartite(2, 2)), true);
  REQUIRE(ok.has_value());

  // Two disjoint edges have flat moduli but four nonzero eigenvalues, which
  // an irreducible nonnegative matrix cannot produce.
  const Graph parts[] = {make_complete(2), make_complete(2)};
  const Spectrum s = spec_of(disjoint_union(parts));
  CHECK(certify_equal_moduli(s).has_value());
  CHECK_THROWS_AS(certify_equal_moduli(s, true), DomainError);
}

TEST_CASE("unit-moduli certificate wants every non-largest modulus at one") {
  const auto k4 = certify_unit_moduli(spec_of(make_complete(4)));
  REQUIRE(k4.has_value());
  CHECK(k4->kind == CertificateKind::unit_moduli);
  CHECK(std::abs(k4->residual) <= 1e-9);

  const Graph parts[] = {make_complete(4), make_complete(2)};
  const auto u = certify_unit_moduli(spec_of(disjoint_union(parts)));
  REQUIRE(u.has_value());
  CHECK(std::abs(u->residual) <= 1e-9);

  CHECK_FALSE(certify_unit_moduli(spec_of(make_path(4))).has_value());
  CHECK_FALSE(certify_unit_moduli(spec_of(make_cycle(4))).has_value());
  CHECK_FALSE(certify_unit_moduli(spec_of(make_cycle(6))).has_value());
}

TEST_CASE("bipartite-union matcher requires complete parts and equal products") {
  const auto single = match_bipartite_union(make_complete_bipartite(2, 3));
  REQUIRE(single.has_value());
  CHECK(single->kind == CertificateKind::bipartite_union);
  CHECK(single->bipartite_parts ==
        std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(single->kappa == 3);
  CHECK(std::abs(single->residual) <= 1e-9);

  const Graph matched_parts[] = {make_complete_bipartite(1, 6),
                                 make_complete_bipartite(2, 3)};
  const auto matched = match_bipartite_union(disjoint_union(matched_parts));
  REQUIRE(matched.has_value());
  CHECK(matched->bipartite_parts ==
        std::vector<std::pair<int, int>>{{1, 6}, {2, 3}});
  CHECK(matched->kappa == 12 - 4);
  CHECK(std::abs(matched->residual) <= 1e-9 * 2.0 * std::sqrt(6.0) * 2.0);

  const Graph unmatched_parts[] = {make_complete_bipartite(1, 2),
                                   make_complete_bipartite(1, 3)};
  CHECK_FALSE(match_bipartite_union(disjoint_union(unmatched_parts)).has_value());
  CHECK_FALSE(match_bipartite_union(make_path(4)).has_value());
  CHECK_FALSE(match_bipartite_union(make_complete(3)).has_value());
  const Graph with_point[] = {make_complete_bipartite(2, 2), make_complete(1)};
  CHECK_FALSE(match_bipartite_union(disjoint_union(with_point)).has_value());
}

TEST_CASE("clique-matching matcher covers cliques, matchings and points") {
  const Graph family[] = {make_complete(4), make_complete(2), make_complete(1)};
  const auto cert = match_clique_matching_union(disjoint_union(family));
  REQUIRE(cert.has_value());
  CHECK(cert->kind == CertificateKind::clique_matching_union);
  CHECK(cert->clique_order == 4);
  CHECK(cert->matchings == 1);
  CHECK(cert->isolated == 1);
  CHECK(cert->ell == 3);
  CHECK(cert->kappa == 1);
  CHECK(std::abs(cert->residual) <= 1e-9 * 8.0);

  CHECK(match_clique_matching_union(make_complete(5)).has_value());
  CHECK(match_clique_matching_union(make_complete(2)).has_value());
  const Graph matchings[] = {make_complete(2), make_complete(2),
                             make_complete(2)};
  CHECK(match_clique_matching_union(disjoint_union(matchings)).has_value());

  const Graph two_cliques[] = {make_complete(3), make_complete(3)};
  CHECK_FALSE(match_clique_matching_union(disjoint_union(two_cliques)).has_value());
  const Graph stray_path[] = {make_complete(4), make_path(3)};
  CHECK_FALSE(match_clique_matching_union(disjoint_union(stray_path)).has_value());
  CHECK_FALSE(match_clique_matching_union(Graph(3)).has_value());
  CHECK_FALSE(match_clique_matching_union(make_path(4)).has_value());
}

TEST_CASE("certificates imply a tight bound on a random control set") {
  std::mt19937 rng(20250911);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = gt::pick(rng, 2, 12);
    const Graph g = gt::random_graph(rng, n, 0.45);
    if (g.size() == 0) continue;
    const SpectralSummary s = summarize(g.adjacency());
    const double slack = 1e-9 * std::max(1.0, s.energy_value);
    if (auto c = match_bipartite_union(g)) CHECK(std::abs(c->residual) <= slack);
    if (auto c = match_clique_matching_union(g))
      CHECK(std::abs(c->residual) <= slack);
    if (auto c = certify_equal_moduli(s.spectrum))
      CHECK(std::abs(c->residual) <= slack);
    if (auto c = certify_unit_moduli(s.spectrum))
      CHECK(std::abs(c->residual) <= slack);
  }
}

TEST_CASE("path pattern inside the adjacency matrix is found and labeled") {
  const auto w = find_strictness_witness(make_path(3).adjacency());
  REQUIRE(w.has_value());
  CHECK(w->kind == WitnessKind::path_submatrix);
  CHECK(w->indices == std::array<int, 3>{0, 1, 2});
  CHECK(w->a == 1.0);
  CHECK(w->b == 1.0);
  CHECK(w->violated == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  CHECK(find_strictness_witness(make_path(4).adjacency()).has_value());
  CHECK(find_strictness_witness(make_star(5).adjacency()).has_value());
  CHECK(find_strictness_witness(make_cycle(4).adjacency()).has_value());
}

TEST_CASE("clique unions carry no witness because their bound is tight") {
  CHECK_FALSE(find_strictness_witness(make_complete(3).adjacency()).has_value());
  CHECK_FALSE(find_strictness_witness(make_complete(7).adjacency()).has_value());
  const Graph family[] = {make_complete(4), make_complete(2), make_complete(1)};
  CHECK_FALSE(
      find_strictness_witness(disjoint_union(family).adjacency()).has_value());
  CHECK_FALSE(find_strictness_witness(make_complete(1).adjacency()).has_value());
}

TEST_CASE("weighted blocks distinguish the two witness shapes") {
  // Path pattern with a zero corner: fires once sqrt(a^2 + b^2) > 1.
  const SymMatrix weak = SymMatrix::from_rows(
      {{0.0, 0.6, 0.0}, {0.6, 0.0, 0.7}, {0.0, 0.7, 0.0}});
  CHECK_FALSE(find_strictness_witness(weak).has_value());

  const SymMatrix strong = SymMatrix::from_rows(
      {{0.0, 0.8, 0.0}, {0.8, 0.0, 0.9}, {0.0, 0.9, 0.0}});
  const auto pw = find_strictness_witness(strong);
  REQUIRE(pw.has_value());
  CHECK(pw->kind == WitnessKind::path_submatrix);
  CHECK(pw->violated == doctest::Approx(std::hypot(0.8, 0.9)).epsilon(1e-14));

  // Full triple: all corners nonzero, smallest eigenvalue -1.1.
  const SymMatrix triple = SymMatrix::from_rows(
      {{0.0, 1.1, 1.1}, {1.1, 0.0, 1.1}, {1.1, 1.1, 0.0}});
  const auto tw = find_strictness_witness(triple);
  REQUIRE(tw.has_value());
  CHECK(tw->kind == WitnessKind::rayleigh_triple);
  CHECK(tw->violated == doctest::Approx(-1.1).epsilon(1e-12));
  REQUIRE(tw->vector.size() == 3);
  double norm = 0.0, quad = 0.0;
  for (double v : tw->vector) norm += v * v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      quad += tw->vector[std::size_t(i)] * triple(i, j) * tw->vector[std::size_t(j)];
  CHECK(quad / norm == doctest::Approx(-1.1).epsilon(1e-10));

  // An all-ones triangle block sits exactly at -1 and must not fire.
  const SymMatrix flat = SymMatrix::from_rows(
      {{0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}, {1.0, 1.0, 0.0}});
  CHECK_FALSE(find_strictness_witness(flat).has_value());
}

TEST_CASE("witness search respects the probe budget") {
  const SymMatrix a = make_path(3).adjacency();
  CHECK_FALSE(find_strictness_witness(a, 0).has_value());
  CHECK(find_strictness_witness(a, 1).has_value());
  CHECK_THROWS_AS(find_strictness_witness(a, -1), DomainError);
}

TEST_CASE("witness vectors come out the same on repeated runs") {
  std::mt19937 rng(20250912);
  const SymMatrix m = gt::random_real_symmetric(rng, 8);
  const auto first = find_strictness_witness(m);
  const auto second = find_strictness_witness(m);
  REQUIRE(first.has_value() == second.has_value());
  if (first) {
    CHECK(first->indices == second->indices);
    CHECK(first->violated == second->violated);
    if (first->kind == WitnessKind::rayleigh_triple)
      CHECK(first->vector == second->vector);
  }
}
