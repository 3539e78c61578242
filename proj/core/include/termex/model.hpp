#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termex/vocab.hpp"

namespace termex {

struct TrainConfig {
  int dim = 100;
  int window = 5;
  int epochs = 5;
  int negatives = 5;
  std::uint64_t min_count = 5;
  int ngram_min = 3;
  int ngram_max = 6;
  std::uint32_t buckets = 2'000'000;
  double learning_rate = 0.05;
  double subsample_t = 1e-4;  // 0 disables frequent-word subsampling
  std::uint64_t rng_seed = 1;
  int threads = 1;  // <= 1 trains deterministically on a single worker

  void validate() const;  // throws ConfigError
};

// Word vectors, subword-bucket vectors and output (context) vectors of one
// trained model. A query-only model loaded from a vector file has an empty
// subword table (buckets() == 0) and no output vectors.
class EmbeddingModel {
 public:
  EmbeddingModel() = default;
  EmbeddingModel(Vocabulary vocab, TrainConfig config, bool with_outputs);

  int dim() const { return config_.dim; }
  std::uint32_t buckets() const { return config_.buckets; }
  const Vocabulary& vocab() const { return vocab_; }
  const TrainConfig& config() const { return config_; }

  std::span<const float> word_input(std::uint32_t id) const;
  std::span<float> word_input(std::uint32_t id);
  std::span<const float> bucket_vector(std::uint32_t bucket) const;
  std::span<float> bucket_vector(std::uint32_t bucket);
  std::span<const float> word_output(std::uint32_t id) const;
  std::span<float> word_output(std::uint32_t id);

  bool has_outputs() const { return !output_.empty(); }

  // Subword bucket ids of a word under this model's n-gram configuration.
  std::vector<std::uint32_t> word_buckets(std::string_view word) const;

  // Composed vector: in-vocabulary words average their word vector with their
  // subword-bucket vectors ((v + sum buckets) / (1 + count)); out-of-vocabulary
  // words take the mean of their bucket vectors, or zero if they have none.
  std::vector<float> word_vector(std::string_view word) const;

  bool finite() const;  // every stored component is finite

 private:
  Vocabulary vocab_;
  TrainConfig config_;
  std::vector<float> input_;   // |V| x dim
  std::vector<float> sub_;     // buckets x dim
  std::vector<float> output_;  // |V| x dim (training only)
};

// Deterministic initialization: inputs and buckets uniform in
// [-0.5/dim, 0.5/dim] from config.rng_seed, outputs zero.
EmbeddingModel initialize_model(Vocabulary vocab, const TrainConfig& config);

// Plain-text interchange format: header "<vocab_size> <dim>", then one line
// per word with dim floats at six decimals, single-space separated, in
// vocabulary id order. Rows hold the composed word vectors.
void save_vectors(const EmbeddingModel& model, const std::string& path);

// Reads the format above into a query-only model. Throws ParseError with the
// offending line number on malformed input.
EmbeddingModel load_vectors(const std::string& path);

}  // namespace termex
