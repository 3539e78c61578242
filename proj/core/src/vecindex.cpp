#include "termex/vecindex.hpp"

#include <algorithm>
#include <cmath>

#include "termex/errors.hpp"

namespace termex {

namespace {

constexpr double kZeroNorm = 1e-12;

double norm_of(const double* values, int dim) {
  double sum = 0.0;
  for (int i = 0; i < dim; ++i) sum += values[i] * values[i];
  return std::sqrt(sum);
}

}  // namespace

void VectorIndex::insert_row(std::string word, const double* values, double norm) {
  const std::uint32_t id = static_cast<std::uint32_t>(words_.size());
  if (!ids_.emplace(word, id).second)
    throw DataError("duplicate word in vector set: " + word);
  words_.push_back(std::move(word));
  for (int i = 0; i < dim_; ++i) unit_.push_back(values[i] / norm);
}

VectorIndex VectorIndex::build(const EmbeddingModel& model) {
  VectorIndex index;
  index.dim_ = model.dim();
  std::vector<double> row(model.dim());
  for (std::uint32_t id = 0; id < model.vocab().size(); ++id) {
    const std::string& word = model.vocab().word(id);
    const auto vec = model.word_vector(word);
    for (int i = 0; i < index.dim_; ++i) row[i] = vec[i];
    const double norm = norm_of(row.data(), index.dim_);
    if (norm < kZeroNorm) {
      index.skipped_.push_back(word);
      continue;
    }
    index.insert_row(word, row.data(), norm);
  }
  if (index.words_.empty())
    throw DataError("cannot build index: no non-zero vectors");
  return index;
}

VectorIndex VectorIndex::build(std::vector<std::string> words,
                               const std::vector<std::vector<double>>& rows) {
  if (words.size() != rows.size())
    throw DataError("word and vector counts differ");
  VectorIndex index;
  index.dim_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != index.dim_)
      throw DataError("inconsistent vector dimensions");
    const double norm = norm_of(rows[i].data(), index.dim_);
    if (norm < kZeroNorm) {
      index.skipped_.push_back(std::move(words[i]));
      continue;
    }
    index.insert_row(std::move(words[i]), rows[i].data(), norm);
  }
  if (index.words_.empty())
    throw DataError("cannot build index: no non-zero vectors");
  return index;
}

bool VectorIndex::contains(std::string_view word) const {
  return ids_.find(std::string(word)) != ids_.end();
}

std::span<const double> VectorIndex::row(std::uint32_t id) const {
  return {unit_.data() + static_cast<std::size_t>(id) * dim_,
          static_cast<std::size_t>(dim_)};
}

std::uint32_t VectorIndex::id_or_throw(std::string_view word) const {
  const auto it = ids_.find(std::string(word));
  if (it == ids_.end()) throw LookupError("word not in index: " + std::string(word));
  return it->second;
}

double VectorIndex::cosine(std::string_view w1, std::string_view w2) const {
  const auto r1 = row(id_or_throw(w1));
  const auto r2 = row(id_or_throw(w2));
  double sum = 0.0;
  for (int i = 0; i < dim_; ++i) sum += r1[i] * r2[i];
  return sum;
}

NeighborSet VectorIndex::nearest(std::string_view word, std::size_t k) const {
  const std::uint32_t query_id = id_or_throw(word);
  NeighborSet result;
  result.query = std::string(word);
  result.k = k;
  if (k == 0 || words_.size() <= 1) return result;

  const auto query_row = row(query_id);
  std::vector<std::pair<double, std::uint32_t>> scored;
  scored.reserve(words_.size() - 1);
  for (std::uint32_t id = 0; id < words_.size(); ++id) {
    if (id == query_id) continue;
    const auto r = row(id);
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) sum += query_row[i] * r[i];
    scored.emplace_back(sum, id);
  }

  const auto better = [this](const std::pair<double, std::uint32_t>& a,
                             const std::pair<double, std::uint32_t>& b) {
    if (a.first != b.first) return a.first > b.first;
    return words_[a.second] < words_[b.second];
  };
  const std::size_t take = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + take, scored.end(), better);

  result.neighbors.reserve(take);
  for (std::size_t i = 0; i < take; ++i)
    result.neighbors.emplace_back(words_[scored[i].second], scored[i].first);
  return result;
}

}  // namespace termex
