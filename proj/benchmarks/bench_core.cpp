// Microbenchmarks for the hot paths: sumsets, energy moments, fiber-tree
// construction, the subtree DP, and end-to-end extraction.

#include <benchmark/benchmark.h>

#include "addcomb/fiber_tree.hpp"
#include "addcomb/generators.hpp"
#include "addcomb/intset.hpp"
#include "addcomb/moments.hpp"
#include "addcomb/pfr.hpp"
#include "addcomb/tree_stats.hpp"

namespace {

using namespace addcomb;

IntSet bench_int_set(std::size_t count) {
  Rng rng(42);
  return random_int_set(rng, count, 1 << 20);
}

LatticeSet bench_lattice_set(int dimension, std::size_t count) {
  Rng rng(42);
  return random_lattice_set(rng, dimension, count, 7);
}

void BM_sumset(benchmark::State& state) {
  const IntSet a = bench_int_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumset(a, a));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_sumset)->Range(32, 512)->Complexity();

void BM_additive_energy(benchmark::State& state) {
  const IntSet a = bench_int_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(additive_energy(a, 2));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_additive_energy)->Range(32, 512)->Complexity();

void BM_build_fiber_tree(benchmark::State& state) {
  const LatticeSet a = bench_lattice_set(4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fiber_tree(a));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_build_fiber_tree)->Range(64, 1024)->Complexity();

void BM_low_subtree_dp(benchmark::State& state) {
  RandomTreeSpec spec;
  spec.nodes = static_cast<int>(state.range(0));
  spec.max_arity = 4;
  spec.max_depth = 16;
  spec.seed = 42;
  const Tree t = random_tree(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_low_subtree(t, 6, true));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_low_subtree_dp)->Range(256, 4096)->Complexity();

void BM_extract(benchmark::State& state) {
  const LatticeSet a = bench_lattice_set(5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_structured_subset(a, Eps{1, 2}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_extract)->Range(64, 512)->Complexity();

}  // namespace

BENCHMARK_MAIN();
