#include "termex/subword.hpp"

#include <algorithm>

#include "termex/utf8.hpp"

namespace termex {

std::vector<std::string> subword_ngrams(std::string_view word, int ngram_min, int ngram_max) {
  std::vector<std::string> ngrams;
  if (word.empty() || ngram_min < 1 || ngram_min > ngram_max) return ngrams;

  std::string wrapped;
  wrapped.reserve(word.size() + 2);
  wrapped.push_back('<');
  wrapped.append(word);
  wrapped.push_back('>');

  const auto offsets = utf8::codepoint_offsets(wrapped);
  const int total = static_cast<int>(offsets.size()) - 1;
  if (ngram_min > total) return ngrams;

  for (int start = 0; start < total; ++start) {
    const int max_len = std::min(ngram_max, total - start);
    for (int len = ngram_min; len <= max_len; ++len) {
      if (start == 0 && len == total && total > ngram_min) continue;  // whole word
      ngrams.emplace_back(wrapped.substr(offsets[start], offsets[start + len] - offsets[start]));
    }
  }
  return ngrams;
}

std::vector<std::uint32_t> subword_buckets(std::string_view word, int ngram_min,
                                           int ngram_max, std::uint32_t buckets) {
  std::vector<std::uint32_t> ids;
  if (buckets == 0) return ids;
  for (const auto& ngram : subword_ngrams(word, ngram_min, ngram_max))
    ids.push_back(fnv1a32(ngram) % buckets);
  return ids;
}

}  // namespace termex
