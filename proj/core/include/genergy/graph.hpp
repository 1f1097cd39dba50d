#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "genergy/sym_matrix.hpp"

namespace genergy {

// Simple undirected graph on vertices 0..n-1: no loops, no multi-edges.
// Neighbor lists are kept sorted, so iteration order is deterministic.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return int(adj_.size()); }
  int size() const noexcept { return m_; }

  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);

  int degree(int i) const;
  const std::vector<int>& neighbors(int i) const;

  // Edge list as (i, j) with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // 0/1 integer-exact adjacency matrix; requires order() >= 1.
  SymMatrix adjacency() const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Connected component as a relabeled induced subgraph.  vertices[i] is
// the original label of subgraph vertex i; labels are ascending.
struct Component {
  Graph graph;
  std::vector<int> vertices;
};

// Components ordered by smallest original vertex.
std::vector<Component> components(const Graph& g);

struct DegreeVector {
  int k = 0;
  std::vector<std::int64_t> values;
};

// Iterated degree sums (walk counts): k = 0 gives all ones, k = 1 the
// ordinary degrees, and step k+1 sums the step-k values over each
// neighborhood.  Exact in int64; throws OverflowError (suggesting the
// normalized gamma path) when a sum leaves the range.
DegreeVector k_degree(const Graph& g, int k);

}  // namespace genergy
