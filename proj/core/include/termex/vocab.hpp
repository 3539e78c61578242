#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termex/corpus.hpp"

namespace termex {

struct VocabEntry {
  std::string word;
  std::uint64_t frequency = 0;
};

// Frequency-thresholded word list with dense ids. Ids are assigned in
// descending-frequency order, ties broken lexicographically, so identical
// corpora always produce identical id assignments.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<VocabEntry> entries, std::uint64_t min_count);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(std::string_view word) const;
  std::optional<std::uint32_t> id_of(std::string_view word) const;
  const std::string& word(std::uint32_t id) const { return entries_[id].word; }
  std::uint64_t frequency(std::uint32_t id) const { return entries_[id].frequency; }
  std::uint64_t min_count() const { return min_count_; }

  // Sum of retained frequencies; the token budget the trainer schedules over.
  std::uint64_t total_tokens() const { return total_tokens_; }

  const std::vector<VocabEntry>& entries() const { return entries_; }

 private:
  std::vector<VocabEntry> entries_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint64_t min_count_ = 0;
  std::uint64_t total_tokens_ = 0;
};

// Counts word tokens (tokens with at least one letter, so punctuation and
// bare numbers never get vectors) and keeps those with frequency >= min_count.
Vocabulary build_vocab(const Corpus& corpus, std::uint64_t min_count);

}  // namespace termex
