#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termex/model.hpp"

namespace termex {

// Ranked top-k cosine neighbors of one query word. Ordering is cosine
// descending with lexicographic tie-break; the query itself never appears.
struct NeighborSet {
  std::string query;
  std::size_t k = 0;
  std::vector<std::pair<std::string, double>> neighbors;
};

// Exact cosine search over unit-normalized rows. Zero vectors are dropped at
// build time and listed in skipped(). Immutable after build; concurrent
// queries are safe.
class VectorIndex {
 public:
  static VectorIndex build(const EmbeddingModel& model);
  static VectorIndex build(std::vector<std::string> words,
                           const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return words_.size(); }
  int dim() const { return dim_; }
  bool contains(std::string_view word) const;
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::string>& skipped() const { return skipped_; }
  std::span<const double> row(std::uint32_t id) const;

  // Dot product of unit rows; throws LookupError for unknown words.
  double cosine(std::string_view w1, std::string_view w2) const;

  // Top-k neighbors excluding the query; k beyond size() - 1 is clamped.
  NeighborSet nearest(std::string_view word, std::size_t k) const;

 private:
  VectorIndex() = default;
  void insert_row(std::string word, const double* values, double norm);
  std::uint32_t id_or_throw(std::string_view word) const;

  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<double> unit_;  // size() x dim, rows normalized to unit length
  std::vector<std::string> skipped_;
  int dim_ = 0;
};

}  // namespace termex
