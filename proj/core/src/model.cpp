#include "termex/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "termex/errors.hpp"
#include "termex/rng.hpp"
#include "termex/subword.hpp"

namespace termex {

void TrainConfig::validate() const {
  if (dim < 1) throw ConfigError("dim must be >= 1");
  if (window < 1) throw ConfigError("window must be >= 1");
  if (epochs < 0) throw ConfigError("epochs must be >= 0");
  if (negatives < 0) throw ConfigError("negatives must be >= 0");
  if (ngram_min < 1) throw ConfigError("ngram_min must be >= 1");
  if (ngram_min > ngram_max) throw ConfigError("ngram_min must be <= ngram_max");
  if (buckets < 1) throw ConfigError("buckets must be >= 1");
  if (learning_rate <= 0) throw ConfigError("learning_rate must be positive");
  if (subsample_t < 0) throw ConfigError("subsample_t must be >= 0");
}

EmbeddingModel::EmbeddingModel(Vocabulary vocab, TrainConfig config, bool with_outputs)
    : vocab_(std::move(vocab)), config_(config) {
  const std::size_t dim = static_cast<std::size_t>(config_.dim);
  input_.assign(vocab_.size() * dim, 0.0f);
  sub_.assign(static_cast<std::size_t>(config_.buckets) * dim, 0.0f);
  if (with_outputs) output_.assign(vocab_.size() * dim, 0.0f);
}

std::span<const float> EmbeddingModel::word_input(std::uint32_t id) const {
  return {input_.data() + static_cast<std::size_t>(id) * config_.dim,
          static_cast<std::size_t>(config_.dim)};
}

std::span<float> EmbeddingModel::word_input(std::uint32_t id) {
  return {input_.data() + static_cast<std::size_t>(id) * config_.dim,
          static_cast<std::size_t>(config_.dim)};
}

std::span<const float> EmbeddingModel::bucket_vector(std::uint32_t bucket) const {
  return {sub_.data() + static_cast<std::size_t>(bucket) * config_.dim,
          static_cast<std::size_t>(config_.dim)};
}

std::span<float> EmbeddingModel::bucket_vector(std::uint32_t bucket) {
  return {sub_.data() + static_cast<std::size_t>(bucket) * config_.dim,
          static_cast<std::size_t>(config_.dim)};
}

std::span<const float> EmbeddingModel::word_output(std::uint32_t id) const {
  return {output_.data() + static_cast<std::size_t>(id) * config_.dim,
          static_cast<std::size_t>(config_.dim)};
}

std::span<float> EmbeddingModel::word_output(std::uint32_t id) {
  return {output_.data() + static_cast<std::size_t>(id) * config_.dim,
          static_cast<std::size_t>(config_.dim)};
}

std::vector<std::uint32_t> EmbeddingModel::word_buckets(std::string_view word) const {
  return subword_buckets(word, config_.ngram_min, config_.ngram_max, config_.buckets);
}

std::vector<float> EmbeddingModel::word_vector(std::string_view word) const {
  const std::size_t dim = static_cast<std::size_t>(config_.dim);
  std::vector<float> vec(dim, 0.0f);
  // Accumulate buckets in sorted order so that equal bucket multisets compose
  // to bit-identical vectors regardless of n-gram order.
  auto buckets = word_buckets(word);
  std::sort(buckets.begin(), buckets.end());
  const auto id = vocab_.id_of(word);

  if (id) {
    const auto row = word_input(*id);
    for (std::size_t i = 0; i < dim; ++i) vec[i] = row[i];
  } else if (buckets.empty()) {
    return vec;  // no vocabulary entry and no n-grams: zero vector
  }

  for (const std::uint32_t b : buckets) {
    const auto row = bucket_vector(b);
    for (std::size_t i = 0; i < dim; ++i) vec[i] += row[i];
  }

  const float divisor =
      id ? static_cast<float>(1 + buckets.size()) : static_cast<float>(buckets.size());
  for (std::size_t i = 0; i < dim; ++i) vec[i] /= divisor;
  return vec;
}

bool EmbeddingModel::finite() const {
  const auto all_finite = [](const std::vector<float>& v) {
    for (const float x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };
  return all_finite(input_) && all_finite(sub_) && all_finite(output_);
}

EmbeddingModel initialize_model(Vocabulary vocab, const TrainConfig& config) {
  config.validate();
  EmbeddingModel model(std::move(vocab), config, /*with_outputs=*/true);
  Rng rng(config.rng_seed);
  const double bound = 0.5 / config.dim;
  for (std::uint32_t id = 0; id < model.vocab().size(); ++id)
    for (float& x : model.word_input(id))
      x = static_cast<float>(rng.next_range(-bound, bound));
  for (std::uint32_t b = 0; b < config.buckets; ++b)
    for (float& x : model.bucket_vector(b))
      x = static_cast<float>(rng.next_range(-bound, bound));
  return model;
}

void save_vectors(const EmbeddingModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << model.vocab().size() << ' ' << model.dim() << '\n';
  char buf[32];
  for (std::uint32_t id = 0; id < model.vocab().size(); ++id) {
    out << model.vocab().word(id);
    for (const float x : model.word_vector(model.vocab().word(id))) {
      std::snprintf(buf, sizeof(buf), " %.6f", static_cast<double>(x));
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

EmbeddingModel load_vectors(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);

  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing header in " + path, line_no);

  std::size_t vocab_size = 0;
  int dim = 0;
  {
    std::istringstream header(line);
    std::string trailing;
    if (!(header >> vocab_size >> dim) || dim < 1 || (header >> trailing))
      throw ParseError("malformed header in " + path, line_no);
  }

  std::vector<VocabEntry> entries;
  entries.reserve(vocab_size);
  std::vector<float> rows;
  rows.reserve(vocab_size * static_cast<std::size_t>(dim));

  for (std::size_t r = 0; r < vocab_size; ++r) {
    ++line_no;
    if (!std::getline(in, line))
      throw ParseError("expected " + std::to_string(vocab_size) + " rows in " + path, line_no);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t pos = line.find(' ');
    if (pos == std::string::npos || pos == 0)
      throw ParseError("row without vector values in " + path, line_no);
    entries.push_back({line.substr(0, pos), 0});

    int count = 0;
    const char* p = line.c_str() + pos;
    while (*p != '\0') {
      while (*p == ' ') ++p;
      if (*p == '\0') break;
      char* end = nullptr;
      const float value = std::strtof(p, &end);
      if (end == p || (*end != ' ' && *end != '\0'))
        throw ParseError("malformed vector value in " + path, line_no);
      if (count >= dim)
        throw ParseError("row has more than " + std::to_string(dim) + " values in " + path,
                         line_no);
      rows.push_back(value);
      ++count;
      p = end;
    }
    if (count != dim)
      throw ParseError("row has " + std::to_string(count) + " values, expected " +
                           std::to_string(dim) + " in " + path,
                       line_no);
  }

  TrainConfig config;
  config.dim = dim;
  config.buckets = 0;  // query-only: no subword table
  config.min_count = 0;

  Vocabulary vocab(std::move(entries), 0);  // throws DataError on duplicates
  EmbeddingModel model(std::move(vocab), config, /*with_outputs=*/false);
  for (std::uint32_t id = 0; id < model.vocab().size(); ++id) {
    auto row = model.word_input(id);
    for (int i = 0; i < dim; ++i) row[i] = rows[static_cast<std::size_t>(id) * dim + i];
  }
  return model;
}

}  // namespace termex
