// Microbenchmarks for the hot paths: the dense eigensolver, the exact
// characteristic polynomial, graph6 round trips, full bound surveys and
// the walk-ratio iteration.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "genergy/bounds.hpp"
#include "genergy/families.hpp"
#include "genergy/graph.hpp"
#include "genergy/graph6.hpp"
#include "genergy/linalg.hpp"

namespace {

genergy::Graph corpus_graph(int n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  genergy::Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(int(rng() % std::uint32_t(v)), v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j) && rng() % 10 < 2) g.add_edge(i, j);
  return g;
}

void bm_eigen(benchmark::State& state) {
  const genergy::Graph g = corpus_graph(int(state.range(0)), 7001);
  const genergy::SymMatrix a = g.adjacency();
  for (auto _ : state) {
    benchmark::DoNotOptimize(genergy::eigen_symmetric(a).values.data());
  }
}
BENCHMARK(bm_eigen)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void bm_char_poly_exact(benchmark::State& state) {
  const genergy::Graph g = corpus_graph(int(state.range(0)), 7002);
  const genergy::SymMatrix a = g.adjacency();
  for (auto _ : state) {
    benchmark::DoNotOptimize(genergy::char_poly_exact(a).data());
  }
}
BENCHMARK(bm_char_poly_exact)->Arg(8)->Arg(16)->Arg(32);

void bm_graph6_round_trip(benchmark::State& state) {
  const genergy::Graph g = corpus_graph(int(state.range(0)), 7003);
  for (auto _ : state) {
    const std::string line = genergy::write_graph6(g);
    benchmark::DoNotOptimize(genergy::parse_graph6(line).order());
  }
}
BENCHMARK(bm_graph6_round_trip)->Arg(16)->Arg(64)->Arg(128);

void bm_survey(benchmark::State& state) {
  const genergy::Graph g = corpus_graph(int(state.range(0)), 7004);
  for (auto _ : state) {
    benchmark::DoNotOptimize(genergy::survey(g).entries.data());
  }
}
BENCHMARK(bm_survey)->Arg(8)->Arg(16)->Arg(32);

void bm_gamma_limit(benchmark::State& state) {
  const genergy::Graph g = corpus_graph(int(state.range(0)), 7005);
  for (auto _ : state) {
    benchmark::DoNotOptimize(genergy::gamma_limit(g).value);
  }
}
BENCHMARK(bm_gamma_limit)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
