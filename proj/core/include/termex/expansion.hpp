#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "termex/relation.hpp"
#include "termex/vecindex.hpp"

namespace termex {

// Seed adjectives for one (relation, language). At least two distinct seeds.
struct RelationSpec {
  Relation relation = Relation::LOCATION;
  Language language = Language::EN;
  std::vector<std::string> seeds;

  void validate() const;  // throws DataError
};

struct Candidate {
  std::string word;
  std::vector<std::string> supporting_seeds;  // sorted; the set T
  std::size_t max_subset_size = 0;            // min(|T|, subset_max)
  double best_cosine = 0.0;                   // highest cosine to any supporting seed
};

// Expansion result, ranked by (support desc, best_cosine desc, word asc).
struct CandidateSet {
  RelationSpec spec;
  std::size_t k = 0;
  std::size_t subset_min = 2;
  std::size_t subset_max = 10;
  std::vector<std::string> missing_seeds;  // seeds absent from the index
  std::vector<Candidate> candidates;

  std::vector<std::string> words() const;
};

// Words present in every neighbor set; needs >= 2 sets.
std::vector<std::string> intersect(std::span<const NeighborSet> sets);

// Expands one seed set: a word is a candidate when it appears in the
// neighbor sets of at least subset_min seeds, which is equivalent to taking
// the union of per-subset intersections over all seed subsets with sizes in
// [subset_min, subset_max]. Seeds never appear as candidates. Missing seeds
// are skipped and reported; fewer than two resolvable seeds is an error.
CandidateSet expand(const RelationSpec& spec, const VectorIndex& index,
                    std::size_t k = 100, std::size_t subset_min = 2,
                    std::size_t subset_max = 10);

// Number of distinct seed subsets whose intersection yields the candidate:
// sum over s in [subset_min, min(subset_max, |T|)] of C(|T|, s).
std::uint64_t support_count(const Candidate& candidate, std::size_t subset_min,
                            std::size_t subset_max);
std::uint64_t support_count(std::size_t support, std::size_t subset_min,
                            std::size_t subset_max);

std::vector<RelationSpec> load_relation_specs(const std::string& path);
const RelationSpec& find_spec(const std::vector<RelationSpec>& specs, Relation relation,
                              Language language);

void save_candidate_set(const CandidateSet& set, const std::string& path);
CandidateSet load_candidate_set(const std::string& path);

}  // namespace termex
