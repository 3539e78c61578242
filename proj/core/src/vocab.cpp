#include "termex/vocab.hpp"

#include <algorithm>

#include "termex/errors.hpp"

namespace termex {

Vocabulary::Vocabulary(std::vector<VocabEntry> entries, std::uint64_t min_count)
    : entries_(std::move(entries)), min_count_(min_count) {
  index_.reserve(entries_.size());
  for (std::uint32_t id = 0; id < entries_.size(); ++id) {
    total_tokens_ += entries_[id].frequency;
    if (!index_.emplace(entries_[id].word, id).second)
      throw DataError("duplicate word in vocabulary: " + entries_[id].word);
  }
}

bool Vocabulary::contains(std::string_view word) const {
  return index_.find(std::string(word)) != index_.end();
}

std::optional<std::uint32_t> Vocabulary::id_of(std::string_view word) const {
  const auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocab(const Corpus& corpus, std::uint64_t min_count) {
  if (!corpus.tokenized && !corpus.documents.empty())
    throw DataError("build_vocab requires a tokenized corpus");

  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& doc : corpus.sentences)
    for (const auto& sentence : doc)
      for (const auto& token : sentence)
        if (token_is_word(token)) ++counts[token];

  std::vector<VocabEntry> entries;
  entries.reserve(counts.size());
  for (auto& [word, freq] : counts)
    if (freq >= min_count) entries.push_back({word, freq});

  std::sort(entries.begin(), entries.end(), [](const VocabEntry& a, const VocabEntry& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.word < b.word;
  });
  return Vocabulary(std::move(entries), min_count);
}

}  // namespace termex
