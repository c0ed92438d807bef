// Serial vs OpenMP kernel comparison on representative problem sizes.

#include <benchmark/benchmark.h>

#include "gpgraph/adjacency.hpp"

using namespace gpgraph;

namespace {

const FieldCtx& field_1024() {
  static FieldCtx f = build_field(2, 10);
  return f;
}
const FieldCtx& field_729() {
  static FieldCtx f = build_field(3, 6);
  return f;
}

void bm_charsum_serial(benchmark::State& state) {
  AdjacencyGraph g = build_adjacency(field_1024(), 3);
  for (auto _ : state) {
    auto v = charsum_eigenvalues_serial(g);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(bm_charsum_serial);

void bm_charsum_omp(benchmark::State& state) {
  AdjacencyGraph g = build_adjacency(field_1024(), 3);
  for (auto _ : state) {
    auto v = charsum_eigenvalues_omp(g);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(bm_charsum_omp);

void bm_weight_histogram_serial(benchmark::State& state) {
  for (auto _ : state) {
    auto h = weight_histogram_serial(field_729(), 4);
    benchmark::DoNotOptimize(h.data());
  }
}
BENCHMARK(bm_weight_histogram_serial);

void bm_weight_histogram_omp(benchmark::State& state) {
  for (auto _ : state) {
    auto h = weight_histogram_omp(field_729(), 4);
    benchmark::DoNotOptimize(h.data());
  }
}
BENCHMARK(bm_weight_histogram_omp);

void bm_common_neighbors_serial(benchmark::State& state) {
  AdjacencyGraph g = build_adjacency(field_729(), 4);
  for (auto _ : state) {
    auto st = common_neighbor_stats_serial(g);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(bm_common_neighbors_serial);

void bm_common_neighbors_omp(benchmark::State& state) {
  AdjacencyGraph g = build_adjacency(field_729(), 4);
  for (auto _ : state) {
    auto st = common_neighbor_stats_omp(g);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(bm_common_neighbors_omp);

void bm_eigensolver(benchmark::State& state) {
  AdjacencyGraph g = build_adjacency(field_1024(), 3);
  for (auto _ : state) {
    auto v = eigensolver_eigenvalues(g);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(bm_eigensolver);

}  // namespace

BENCHMARK_MAIN();
