#pragma once

#include <span>
#include <string_view>

#include "genergy/graph.hpp"

namespace genergy {

Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_path(int n);
Graph make_cycle(int n);

// Star K_{1, n-1} with the center at vertex 0.
Graph make_star(int n);

// Star K_{1, n-2} with one edge subdivided (n >= 4): vertex 0 is the
// center, 1..n-3 are pendant leaves, n-2 subdivides the remaining edge
// and n-1 hangs off it.
Graph make_broom(int n);

// Name-based dispatcher used by the command line: complete n,
// complete_bipartite a b, path n, cycle n, star n, broom n.
Graph make_family(std::string_view name, std::span<const long> params);

Graph disjoint_union(std::span<const Graph> parts);
Graph join(const Graph& g, const Graph& h);

// Replaces every vertex by an independent set of size t >= 1 and every
// edge by a complete bipartite gadget between the copies.
Graph blowup(const Graph& g, int t);

}  // namespace genergy
