#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termex {

// FNV-1a over the raw bytes; the sole hash used for subword buckets, so a
// given n-gram always lands in the same bucket on every platform.
inline std::uint32_t fnv1a32(std::string_view bytes) {
  std::uint32_t hash = 2166136261u;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 16777619u;
  }
  return hash;
}

// Character n-grams of "<word>" with lengths in [ngram_min, ngram_max],
// ordered by (start, length). The full wrapped form is included only when it
// is the single n-gram in range (i.e. its length equals ngram_min); longer
// words never emit themselves. Lengths count code points, not bytes.
std::vector<std::string> subword_ngrams(std::string_view word, int ngram_min, int ngram_max);

// Bucket ids (fnv1a32 % buckets) of the word's n-grams, in n-gram order.
// buckets == 0 means "no subword table" and always yields an empty list.
std::vector<std::uint32_t> subword_buckets(std::string_view word, int ngram_min,
                                           int ngram_max, std::uint32_t buckets);

}  // namespace termex
