#include "genergy/families.hpp"

#include <string>

#include "genergy/errors.hpp"

namespace genergy {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_star(int n) {
  require(n >= 1, "star needs n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph make_broom(int n) {
  require(n >= 4, "subdivided star needs n >= 4");
  Graph g(n);
  for (int i = 1; i <= n - 3; ++i) g.add_edge(0, i);
  g.add_edge(0, n - 2);
  g.add_edge(n - 2, n - 1);
  return g;
}

Graph make_family(std::string_view name, std::span<const long> params) {
  const auto arity = [&](std::size_t want) {
    if (params.size() != want)
      throw DomainError(std::string("family ") + std::string(name) +
                        " takes " + std::to_string(want) + " parameter(s), got " +
                        std::to_string(params.size()));
  };
  const auto as_int = [](long v) {
    if (v < 0 || v > (1 << 20))
      throw DomainError("family parameter " + std::to_string(v) +
                        " out of range");
    return int(v);
  };
  if (name == "complete") {
    arity(1);
    return make_complete(as_int(params[0]));
  }
  if (name == "complete_bipartite") {
    arity(2);
    return make_complete_bipartite(as_int(params[0]), as_int(params[1]));
  }
  if (name == "path") {
    arity(1);
    return make_path(as_int(params[0]));
  }
  if (name == "cycle") {
    arity(1);
    return make_cycle(as_int(params[0]));
  }
  if (name == "star") {
    arity(1);
    return make_star(as_int(params[0]));
  }
  if (name == "broom") {
    arity(1);
    return make_broom(as_int(params[0]));
  }
  throw DomainError("unknown family '" + std::string(name) +
                    "'; known: complete, complete_bipartite, path, cycle, "
                    "star, broom");
}

Graph disjoint_union(std::span<const Graph> parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.order();
  Graph g(n);
  int base = 0;
  for (const Graph& p : parts) {
    for (const auto& [i, j] : p.edges()) g.add_edge(base + i, base + j);
    base += p.order();
  }
  return g;
}

Graph join(const Graph& left, const Graph& right) {
  const int nl = left.order();
  const int nr = right.order();
  Graph g(nl + nr);
  for (const auto& [i, j] : left.edges()) g.add_edge(i, j);
  for (const auto& [i, j] : right.edges()) g.add_edge(nl + i, nl + j);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j) g.add_edge(i, nl + j);
  return g;
}

Graph blowup(const Graph& g, int t) {
  require(t >= 1, "blowup factor must be >= 1");
  Graph h(g.order() * t);
  for (const auto& [u, v] : g.edges())
    for (int p = 0; p < t; ++p)
      for (int q = 0; q < t; ++q) h.add_edge(u * t + p, v * t + q);
  return h;
}

}  // namespace genergy
