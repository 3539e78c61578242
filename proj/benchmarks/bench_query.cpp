#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "termex/expansion.hpp"
#include "termex/rng.hpp"
#include "termex/vecindex.hpp"

namespace {

using namespace termex;

VectorIndex make_index(std::size_t size, int dim) {
  Rng rng(11);
  std::vector<std::string> words;
  std::vector<std::vector<double>> rows(size, std::vector<double>(dim));
  for (std::size_t i = 0; i < size; ++i) words.push_back("w" + std::to_string(i));
  for (auto& row : rows)
    for (auto& x : row) x = rng.next_range(-1.0, 1.0);
  return VectorIndex::build(std::move(words), rows);
}

void BM_nearest(benchmark::State& state) {
  const VectorIndex index = make_index(static_cast<std::size_t>(state.range(0)), 100);
  Rng rng(3);
  for (auto _ : state) {
    const auto& query = index.words()[rng.next_below(index.size())];
    const NeighborSet n = index.nearest(query, 100);
    benchmark::DoNotOptimize(n.neighbors.data());
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_expand(benchmark::State& state) {
  const VectorIndex index = make_index(5000, 100);
  RelationSpec spec;
  spec.relation = Relation::CAUSE;
  for (int s = 0; s < state.range(0); ++s) spec.seeds.push_back("w" + std::to_string(s));
  for (auto _ : state) {
    const CandidateSet result = expand(spec, index, 100, 2, 10);
    benchmark::DoNotOptimize(result.candidates.data());
  }
  state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(BM_nearest)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_expand)->Arg(5)->Arg(10)->Arg(17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
