#include "termex/trainer.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "termex/errors.hpp"
#include "termex/rng.hpp"
#include "termex/sgns.hpp"

namespace termex {

namespace {

constexpr std::size_t kUnigramTableSize = 1 << 20;

class Trainer {
 public:
  Trainer(EmbeddingModel& model, const Corpus& corpus, const TrainConfig& cfg)
      : model_(model), cfg_(cfg) {
    const auto& vocab = model_.vocab();

    // Sentences as vocabulary ids; out-of-vocabulary tokens drop out here.
    for (const auto& doc : corpus.sentences)
      for (const auto& sentence : doc) {
        std::vector<std::uint32_t> ids;
        ids.reserve(sentence.size());
        for (const auto& token : sentence)
          if (const auto id = vocab.id_of(token)) ids.push_back(*id);
        if (!ids.empty()) {
          tokens_per_epoch_ += ids.size();
          sentences_.push_back(std::move(ids));
        }
      }

    buckets_.resize(vocab.size());
    for (std::uint32_t id = 0; id < vocab.size(); ++id)
      buckets_[id] = model_.word_buckets(vocab.word(id));

    build_unigram_table();
    build_keep_probs();
  }

  void run() {
    if (sentences_.empty() || cfg_.epochs == 0) return;
    total_steps_ = static_cast<std::uint64_t>(cfg_.epochs) * tokens_per_epoch_;

    const int workers = cfg_.threads > 1 ? cfg_.threads : 1;
    if (workers == 1) {
      work(0, 1);
      return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([this, w, workers] { work(w, workers); });
    for (auto& t : pool) t.join();
  }

 private:
  void build_unigram_table() {
    const auto& vocab = model_.vocab();
    table_.resize(kUnigramTableSize);
    double total = 0.0;
    for (std::uint32_t id = 0; id < vocab.size(); ++id)
      total += std::pow(static_cast<double>(vocab.frequency(id)), 0.75);

    std::uint32_t id = 0;
    double cumulative = std::pow(static_cast<double>(vocab.frequency(0)), 0.75) / total;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      table_[i] = id;
      if (static_cast<double>(i + 1) / table_.size() > cumulative && id + 1 < vocab.size()) {
        ++id;
        cumulative += std::pow(static_cast<double>(vocab.frequency(id)), 0.75) / total;
      }
    }
  }

  void build_keep_probs() {
    const auto& vocab = model_.vocab();
    keep_prob_.assign(vocab.size(), 1.0);
    if (cfg_.subsample_t <= 0 || vocab.total_tokens() == 0) return;
    for (std::uint32_t id = 0; id < vocab.size(); ++id) {
      const double f =
          static_cast<double>(vocab.frequency(id)) / vocab.total_tokens();
      const double p = std::sqrt(cfg_.subsample_t / f) + cfg_.subsample_t / f;
      keep_prob_[id] = p < 1.0 ? p : 1.0;
    }
  }

  void work(int worker, int workers) {
    Rng rng(cfg_.rng_seed + 0x51ed2701u * static_cast<std::uint64_t>(worker + 1));
    const int dim = cfg_.dim;
    std::vector<float> h(dim), grad_h(dim);
    std::vector<std::uint32_t> kept_ids;
    std::vector<std::size_t> kept_pos;
    std::vector<const float*> bucket_rows;
    std::vector<float*> neg_rows;
    neg_rows.reserve(static_cast<std::size_t>(cfg_.negatives));

    const std::size_t n = sentences_.size();
    const std::size_t begin = n * static_cast<std::size_t>(worker) / workers;
    const std::size_t end = n * static_cast<std::size_t>(worker + 1) / workers;

    for (int epoch = 0; epoch < cfg_.epochs; ++epoch) {
      for (std::size_t s = begin; s < end; ++s) {
        const auto& ids = sentences_[s];
        const std::uint64_t base_step =
            steps_.fetch_add(ids.size(), std::memory_order_relaxed);

        kept_ids.clear();
        kept_pos.clear();
        for (std::size_t i = 0; i < ids.size(); ++i) {
          if (keep_prob_[ids[i]] >= 1.0 || rng.next_double() < keep_prob_[ids[i]]) {
            kept_ids.push_back(ids[i]);
            kept_pos.push_back(i);
          }
        }

        for (std::size_t pos = 0; pos < kept_ids.size(); ++pos) {
          const std::uint32_t target = kept_ids[pos];
          const double done =
              static_cast<double>(base_step + kept_pos[pos]) / total_steps_;
          const float lr = static_cast<float>(cfg_.learning_rate * (1.0 - done));
          if (lr <= 0.0f) continue;

          const std::size_t reach = 1 + rng.next_below(cfg_.window);
          const std::size_t lo = pos > reach ? pos - reach : 0;
          const std::size_t hi =
              std::min(kept_ids.size(), pos + reach + 1);

          const auto& target_buckets = buckets_[target];
          bucket_rows.clear();
          for (const std::uint32_t b : target_buckets)
            bucket_rows.push_back(model_.bucket_vector(b).data());

          for (std::size_t c = lo; c < hi; ++c) {
            if (c == pos) continue;
            const std::uint32_t context = kept_ids[c];

            sgns::compose_input<float>(model_.word_input(target), bucket_rows, h);

            neg_rows.clear();
            for (int k = 0; k < cfg_.negatives; ++k) {
              std::uint32_t sample = context;
              for (int tries = 0; tries < 100 && sample == context; ++tries)
                sample = table_[rng.next_below(table_.size())];
              neg_rows.push_back(model_.word_output(sample).data());
            }

            sgns::pair_update<float>(h, lr, model_.word_output(context),
                                     neg_rows, grad_h);

            auto target_row = model_.word_input(target);
            for (int i = 0; i < dim; ++i) target_row[i] -= lr * grad_h[i];
            for (const std::uint32_t b : target_buckets) {
              auto row = model_.bucket_vector(b);
              for (int i = 0; i < dim; ++i) row[i] -= lr * grad_h[i];
            }
          }
        }
      }
    }
  }

  EmbeddingModel& model_;
  const TrainConfig& cfg_;
  std::vector<std::vector<std::uint32_t>> sentences_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::vector<std::uint32_t> table_;
  std::vector<double> keep_prob_;
  std::uint64_t tokens_per_epoch_ = 0;
  std::uint64_t total_steps_ = 1;
  std::atomic<std::uint64_t> steps_{0};
};

}  // namespace

EmbeddingModel train(const Corpus& corpus, const TrainConfig& config) {
  config.validate();
  if (!corpus.tokenized) throw DataError("train requires a tokenized corpus");

  Vocabulary vocab = build_vocab(corpus, config.min_count);
  if (vocab.empty())
    throw DataError("training requires a non-empty vocabulary (check min_count)");

  EmbeddingModel model = initialize_model(std::move(vocab), config);
  Trainer trainer(model, corpus, config);
  trainer.run();
  return model;
}

}  // namespace termex
