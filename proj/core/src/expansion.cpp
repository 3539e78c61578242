#include "termex/expansion.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "termex/errors.hpp"

namespace termex {

using ordered_json = nlohmann::ordered_json;

void RelationSpec::validate() const {
  std::unordered_set<std::string> unique(seeds.begin(), seeds.end());
  if (unique.size() != seeds.size()) throw DataError("seed list contains duplicates");
  if (seeds.size() < 2)
    throw DataError("relation " + std::string(to_string(relation)) +
                    " needs at least 2 seeds, got " + std::to_string(seeds.size()));
  for (const auto& s : seeds)
    if (s.empty()) throw DataError("empty seed word");
}

std::vector<std::string> CandidateSet::words() const {
  std::vector<std::string> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(c.word);
  return out;
}

std::vector<std::string> intersect(std::span<const NeighborSet> sets) {
  if (sets.size() < 2)
    throw std::invalid_argument("intersect requires at least 2 neighbor sets");

  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& set : sets)
    for (const auto& [word, cosine] : set.neighbors) ++counts[word];

  std::vector<std::string> common;
  for (const auto& [word, count] : counts)
    if (count == sets.size()) common.push_back(word);
  std::sort(common.begin(), common.end());
  return common;
}

CandidateSet expand(const RelationSpec& spec, const VectorIndex& index, std::size_t k,
                    std::size_t subset_min, std::size_t subset_max) {
  spec.validate();
  if (subset_min < 1 || subset_min > subset_max)
    throw std::invalid_argument("invalid subset size range");

  CandidateSet result;
  result.spec = spec;
  result.k = k;
  result.subset_min = subset_min;
  result.subset_max = subset_max;

  std::vector<std::string> resolved;
  for (const auto& seed : spec.seeds) {
    if (index.contains(seed))
      resolved.push_back(seed);
    else
      result.missing_seeds.push_back(seed);
  }
  if (resolved.size() < 2) {
    std::string missing;
    for (const auto& seed : result.missing_seeds)
      missing += (missing.empty() ? "" : ", ") + seed;
    throw DataError("expansion needs at least 2 seeds in the index; missing: " + missing);
  }

  struct Support {
    std::vector<std::string> seeds;
    double best_cosine = -2.0;
  };
  std::map<std::string, Support> by_word;  // ordered: deterministic iteration
  const std::unordered_set<std::string> seed_set(spec.seeds.begin(), spec.seeds.end());

  for (const auto& seed : resolved) {
    const NeighborSet neighbors = index.nearest(seed, k);
    for (const auto& [word, cosine] : neighbors.neighbors) {
      if (seed_set.count(word)) continue;
      auto& support = by_word[word];
      support.seeds.push_back(seed);
      support.best_cosine = std::max(support.best_cosine, cosine);
    }
  }

  for (auto& [word, support] : by_word) {
    if (support.seeds.size() < subset_min) continue;
    Candidate candidate;
    candidate.word = word;
    std::sort(support.seeds.begin(), support.seeds.end());
    candidate.supporting_seeds = std::move(support.seeds);
    candidate.max_subset_size = std::min(candidate.supporting_seeds.size(), subset_max);
    candidate.best_cosine = support.best_cosine;
    result.candidates.push_back(std::move(candidate));
  }

  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.supporting_seeds.size() != b.supporting_seeds.size())
                return a.supporting_seeds.size() > b.supporting_seeds.size();
              if (a.best_cosine != b.best_cosine) return a.best_cosine > b.best_cosine;
              return a.word < b.word;
            });
  return result;
}

std::uint64_t support_count(std::size_t support, std::size_t subset_min,
                            std::size_t subset_max) {
  const std::size_t hi = std::min(subset_max, support);
  std::uint64_t total = 0;
  for (std::size_t s = subset_min; s <= hi; ++s) {
    // C(support, s) built incrementally; supports the seed-list sizes in use.
    std::uint64_t binom = 1;
    for (std::size_t i = 0; i < s; ++i) binom = binom * (support - i) / (i + 1);
    total += binom;
  }
  return total;
}

std::uint64_t support_count(const Candidate& candidate, std::size_t subset_min,
                            std::size_t subset_max) {
  return support_count(candidate.supporting_seeds.size(), subset_min, subset_max);
}

std::vector<RelationSpec> load_relation_specs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw DataError("seed file must be a JSON array: " + path);

  std::vector<RelationSpec> specs;
  for (const auto& item : doc) {
    RelationSpec spec;
    spec.relation = parse_relation(item.at("relation").get<std::string>());
    spec.language = parse_language(item.at("language").get<std::string>());
    for (const auto& seed : item.at("seeds")) {
      const auto word = seed.get<std::string>();
      if (std::find(spec.seeds.begin(), spec.seeds.end(), word) == spec.seeds.end())
        spec.seeds.push_back(word);
    }
    spec.validate();
    specs.push_back(std::move(spec));
  }
  return specs;
}

const RelationSpec& find_spec(const std::vector<RelationSpec>& specs, Relation relation,
                              Language language) {
  for (const auto& spec : specs)
    if (spec.relation == relation && spec.language == language) return spec;
  throw LookupError("no seed list for relation " + std::string(to_string(relation)) +
                    ", language " + std::string(to_string(language)));
}

void save_candidate_set(const CandidateSet& set, const std::string& path) {
  ordered_json doc;
  doc["relation"] = to_string(set.spec.relation);
  doc["language"] = to_string(set.spec.language);
  doc["seeds"] = set.spec.seeds;
  doc["k"] = set.k;
  doc["subset_min"] = set.subset_min;
  doc["subset_max"] = set.subset_max;
  doc["missing_seeds"] = set.missing_seeds;
  doc["candidates"] = ordered_json::array();
  for (const auto& c : set.candidates) {
    ordered_json entry;
    entry["word"] = c.word;
    entry["supporting_seeds"] = c.supporting_seeds;
    entry["support_subsets"] = support_count(c, set.subset_min, set.subset_max);
    entry["max_subset_size"] = c.max_subset_size;
    entry["best_cosine"] = c.best_cosine;
    doc["candidates"].push_back(std::move(entry));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

CandidateSet load_candidate_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }

  CandidateSet set;
  set.spec.relation = parse_relation(doc.at("relation").get<std::string>());
  set.spec.language = parse_language(doc.at("language").get<std::string>());
  if (doc.contains("seeds"))
    set.spec.seeds = doc["seeds"].get<std::vector<std::string>>();
  set.k = doc.value("k", 0u);
  set.subset_min = doc.value("subset_min", 2u);
  set.subset_max = doc.value("subset_max", 10u);
  if (doc.contains("missing_seeds"))
    set.missing_seeds = doc["missing_seeds"].get<std::vector<std::string>>();
  for (const auto& entry : doc.at("candidates")) {
    Candidate c;
    c.word = entry.at("word").get<std::string>();
    if (entry.contains("supporting_seeds"))
      c.supporting_seeds = entry["supporting_seeds"].get<std::vector<std::string>>();
    c.max_subset_size = entry.value("max_subset_size", 0u);
    c.best_cosine = entry.value("best_cosine", 0.0);
    set.candidates.push_back(std::move(c));
  }
  return set;
}

}  // namespace termex
