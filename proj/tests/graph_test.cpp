#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "genergy/errors.hpp"
#include "genergy/families.hpp"
#include "genergy/graph.hpp"
#include "genergy/graph6.hpp"
#include "helpers.hpp"

using namespace genergy;
namespace gt = genergy::testing;

TEST_CASE("graph construction enforces simple undirected structure") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(g.add_edge(0, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(2, 2), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 4), DomainError);
  CHECK_THROWS_AS(Graph(-1), DomainError);
}

TEST_CASE("adjacency matrices carry the exact integer payload") {
  const SymMatrix a = make_complete(3).adjacency();
  CHECK(a.integer_exact());
  CHECK(a(0, 1) == 1.0);
  CHECK(a(0, 0) == 0.0);
  CHECK(a.integer_at(1, 2) == 1);
}

TEST_CASE("components come back ordered by their smallest vertex") {
  Graph g(6);
  g.add_edge(2, 3);
  g.add_edge(0, 5);
  const std::vector<Component> comps = components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].vertices == std::vector<int>{0, 5});
  CHECK(comps[1].vertices == std::vector<int>{1});
  CHECK(comps[2].vertices == std::vector<int>{2, 3});
  CHECK(comps[3].vertices == std::vector<int>{4});
  CHECK(comps[0].graph.size() == 1);
  CHECK(comps[0].graph.has_edge(0, 1));
  CHECK(comps[1].graph.order() == 1);
}

TEST_CASE("family generators have the textbook vertex and edge counts") {
  CHECK(make_complete(4).size() == 6);
  CHECK(make_complete(1).size() == 0);
  CHECK(make_complete_bipartite(2, 3).size() == 6);
  CHECK(make_complete_bipartite(2, 3).order() == 5);
  CHECK(make_path(1).size() == 0);
  CHECK(make_path(5).size() == 4);
  CHECK(make_cycle(3).size() == 3);
  CHECK(make_star(5).size() == 4);
  CHECK(make_star(5).degree(0) == 4);
  CHECK_THROWS_AS(make_cycle(2), DomainError);
  CHECK_THROWS_AS(make_complete(-2), DomainError);
}

TEST_CASE("the broom is a tree with one high-degree center and a pendant path") {
  const Graph b = make_broom(7);
  CHECK(b.order() == 7);
  CHECK(b.size() == 6);
  CHECK(b.degree(0) == 5);   // center: leaves plus the subdivision vertex
  CHECK(b.degree(5) == 2);   // subdivision vertex sits between center and tail
  CHECK(b.degree(6) == 1);   // tail
  for (int leaf = 1; leaf <= 4; ++leaf) CHECK(b.degree(leaf) == 1);
  CHECK_THROWS_AS(make_broom(3), DomainError);
}

TEST_CASE("family lookup by name matches the direct constructors") {
  const long four[] = {4};
  CHECK(make_family("complete", four).edges() == make_complete(4).edges());
  const long two_three[] = {2, 3};
  CHECK(make_family("complete_bipartite", two_three).edges() ==
        make_complete_bipartite(2, 3).edges());
  CHECK(make_family("broom", {std::begin(four), 1}).edges() ==
        make_broom(4).edges());
  CHECK_THROWS_AS(make_family("frobnicate", four), DomainError);
  CHECK_THROWS_AS(make_family("complete", two_three), DomainError);
  const long negative[] = {-3};
  CHECK_THROWS_AS(make_family("path", negative), DomainError);
}

TEST_CASE("union, join and blow-up compose orders and sizes correctly") {
  const Graph parts[] = {make_complete(3), make_path(2)};
  const Graph u = disjoint_union(parts);
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  CHECK(u.has_edge(3, 4));
  CHECK_FALSE(u.has_edge(2, 3));

  const Graph j = join(make_complete(1), make_complete(1));
  CHECK(j.edges() == make_complete(2).edges());
  const Graph j2 = join(make_path(2), make_path(3));
  CHECK(j2.size() == 2 + 1 + 2 * 3);

  const Graph b = blowup(make_complete(3), 2);
  CHECK(b.order() == 6);
  CHECK(b.size() == 12);
  for (int v = 0; v < 6; ++v) CHECK(b.degree(v) == 4);
  CHECK(blowup(make_path(4), 1).edges() == make_path(4).edges());
  CHECK_THROWS_AS(blowup(make_path(4), 0), DomainError);
}

TEST_CASE("walk counts follow the adjacency recursion and overflow loudly") {
  const Graph p4 = make_path(4);
  CHECK(k_degree(p4, 1).values == std::vector<std::int64_t>{1, 2, 2, 1});
  CHECK(k_degree(p4, 2).values == std::vector<std::int64_t>{2, 3, 3, 2});
  CHECK(k_degree(p4, 3).values == std::vector<std::int64_t>{3, 5, 5, 3});

  // Walk counts in a large clique grow by a factor of eleven per step and
  // leave the 64-bit range well before k = 20.
  const Graph k12 = make_complete(12);
  CHECK_THROWS_AS(k_degree(k12, 20), OverflowError);
}

TEST_CASE("graph6 decoding of the frozen short-form examples") {
  CHECK(parse_graph6("A_").edges() == make_complete(2).edges());
  CHECK(parse_graph6("B?").order() == 3);
  CHECK(parse_graph6("B?").size() == 0);
  CHECK(parse_graph6("Bw").edges() == make_complete(3).edges());
  CHECK(parse_graph6("Ch").edges() == make_path(4).edges());
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6(">>graph6<<A_").edges() == make_complete(2).edges());
}

TEST_CASE("graph6 encoding of the frozen short-form examples") {
  CHECK(write_graph6(make_complete(2)) == "A_");
  CHECK(write_graph6(Graph(3)) == "B?");
  CHECK(write_graph6(make_complete(3)) == "Bw");
  CHECK(write_graph6(make_path(4)) == "Ch");
  CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 survives a random round trip at every header width") {
  std::mt19937 rng(20250906);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = gt::pick(rng, 0, 40);
    const Graph g = gt::random_graph(rng, n, 0.4);
    const Graph back = parse_graph6(write_graph6(g));
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
  }
  // Orders above 62 switch to the three-byte header.
  const Graph big = gt::random_graph(rng, 80, 0.1);
  const std::string line = write_graph6(big);
  CHECK(line.substr(0, 1) == "~");
  CHECK(parse_graph6(line).edges() == big.edges());
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A "), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);    // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6("~~"), ParseError);    // 8-byte headers unsupported
  CHECK_THROWS_AS(parse_graph6("~??}"), ParseError);  // non-canonical long header

  try {
    parse_graph6("bogus!!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
  }
}
