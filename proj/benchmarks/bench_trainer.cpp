#include <benchmark/benchmark.h>

#include "termex/subword.hpp"
#include "termex/synthfix.hpp"
#include "termex/trainer.hpp"

namespace {

using namespace termex;

Corpus make_corpus(std::size_t sentences) {
  SynthSpec spec;
  spec.sentences = sentences;
  spec.rng_seed = 5;
  spec.noise_rate = 0.05;
  spec.families.push_back({Relation::CAUSE, "genic", 20, 30});
  spec.families.push_back({Relation::FORM, "ast", 20, 30});
  spec.families.push_back({Relation::LOCATION, "ski", 20, 30});
  return generate(spec).corpus;
}

void BM_train(benchmark::State& state) {
  const Corpus corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
  TrainConfig cfg;
  cfg.dim = 50;
  cfg.epochs = 2;
  cfg.min_count = 2;
  cfg.buckets = 50000;
  cfg.subsample_t = 0.0;
  cfg.threads = 1;
  std::uint64_t tokens = 0;
  for (auto _ : state) {
    const EmbeddingModel model = train(corpus, cfg);
    benchmark::DoNotOptimize(model.dim());
    tokens += model.vocab().total_tokens() * cfg.epochs;
  }
  state.counters["tokens/s"] =
      benchmark::Counter(static_cast<double>(tokens), benchmark::Counter::kIsRate);
}

void BM_subword_ngrams(benchmark::State& state) {
  std::size_t produced = 0;
  for (auto _ : state) {
    const auto ngrams = subword_ngrams("hydrogeological", 3, 6);
    benchmark::DoNotOptimize(ngrams.data());
    produced += ngrams.size();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(produced));
}

}  // namespace

BENCHMARK(BM_train)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subword_ngrams);

BENCHMARK_MAIN();
