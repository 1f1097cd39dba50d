#include "genergy/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>

#include "genergy/errors.hpp"

namespace genergy {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  adj_.resize(std::size_t(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order())
    throw DomainError("vertex " + std::to_string(v) +
                      " out of range for order " + std::to_string(order()));
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  const auto& nb = adj_[std::size_t(i)];
  return std::binary_search(nb.begin(), nb.end(), j);
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j)
    throw DomainError("loop at vertex " + std::to_string(i) + " rejected");
  auto& ni = adj_[std::size_t(i)];
  const auto pos = std::lower_bound(ni.begin(), ni.end(), j);
  if (pos != ni.end() && *pos == j)
    throw DomainError("duplicate edge (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") rejected");
  ni.insert(pos, j);
  auto& nj = adj_[std::size_t(j)];
  nj.insert(std::lower_bound(nj.begin(), nj.end(), i), i);
  ++m_;
}

int Graph::degree(int i) const {
  check_vertex(i);
  return int(adj_[std::size_t(i)].size());
}

const std::vector<int>& Graph::neighbors(int i) const {
  check_vertex(i);
  return adj_[std::size_t(i)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(std::size_t(m_));
  for (int i = 0; i < order(); ++i)
    for (int j : adj_[std::size_t(i)])
      if (i < j) out.emplace_back(i, j);
  return out;
}

SymMatrix Graph::adjacency() const {
  const int n = order();
  if (n < 1) throw DomainError("adjacency matrix needs at least one vertex");
  std::vector<std::vector<std::int64_t>> rows(std::size_t(n),
                                              std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j : adj_[std::size_t(i)]) rows[std::size_t(i)][std::size_t(j)] = 1;
  return SymMatrix::from_integer_rows(rows);
}

std::vector<Component> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(std::size_t(n), -1);
  std::vector<Component> out;
  for (int start = 0; start < n; ++start) {
    if (label[std::size_t(start)] >= 0) continue;
    std::vector<int> verts;
    std::queue<int> queue;
    queue.push(start);
    label[std::size_t(start)] = int(out.size());
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      verts.push_back(v);
      for (int w : g.neighbors(v))
        if (label[std::size_t(w)] < 0) {
          label[std::size_t(w)] = int(out.size());
          queue.push(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<int> pos(std::size_t(n), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
      pos[std::size_t(verts[i])] = int(i);
    Graph sub(int(verts.size()));
    for (int v : verts)
      for (int w : g.neighbors(v))
        if (v < w) sub.add_edge(pos[std::size_t(v)], pos[std::size_t(w)]);
    out.push_back(Component{std::move(sub), std::move(verts)});
  }
  return out;
}

DegreeVector k_degree(const Graph& g, int k) {
  if (k < 0) throw DomainError("degree iteration count must be nonnegative");
  const int n = g.order();
  // d_0 counts length-zero walks, so it is all ones; each step multiplies
  // by the adjacency matrix and d_1 lands on the ordinary degrees.
  std::vector<std::int64_t> d(std::size_t(n), 1);
  for (int step = 1; step <= k; ++step) {
    std::vector<std::int64_t> next(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) {
      std::int64_t sum = 0;
      for (int j : g.neighbors(i)) {
        if (__builtin_add_overflow(sum, d[std::size_t(j)], &sum))
          throw OverflowError(
              "iterated degree sum overflows int64 at step " +
              std::to_string(step) +
              "; use the normalized gamma iteration instead");
      }
      next[std::size_t(i)] = sum;
    }
    d = std::move(next);
  }
  return DegreeVector{k, std::move(d)};
}

}  // namespace genergy
