#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "termex/expansion.hpp"
#include "termex/morphology.hpp"
#include "termex/relation.hpp"

namespace termex {

enum class Verdict { CORRECT, INCORRECT };

// Human judgments for one (relation, language). The TSV source may carry
// binary verdicts or relation labels; labels resolve to CORRECT when they
// match the annotated relation.
struct GoldAnnotation {
  Relation relation = Relation::LOCATION;
  Language language = Language::EN;
  std::map<std::string, Verdict> judgments;
};

GoldAnnotation load_gold(const std::string& path, Relation relation, Language language);

struct RelationScore {
  Relation relation = Relation::LOCATION;
  Language language = Language::EN;
  std::uint64_t n_extracted = 0;
  std::uint64_t n_correct = 0;
  std::uint64_t n_unjudged = 0;  // candidates absent from gold: count toward N only
  std::optional<int> precision_hundredths;  // undefined when n_extracted == 0

  std::optional<double> precision() const {
    if (!precision_hundredths) return std::nullopt;
    return *precision_hundredths / 100.0;
  }
  std::string precision_text() const;  // "0.33" or "n/a"
};

// precision = n_correct / n_extracted rounded half-up to two decimals,
// computed in exact integer arithmetic.
RelationScore make_relation_score(Relation relation, Language language,
                                  std::uint64_t n_extracted, std::uint64_t n_correct,
                                  std::uint64_t n_unjudged = 0);

RelationScore score(const CandidateSet& candidates, const GoldAnnotation& gold);

// Words present in the candidate sets of two or more relations for one
// language, ordered by (relation count desc, word asc).
struct OverlapReport {
  Language language = Language::EN;
  std::vector<std::pair<std::string, std::vector<Relation>>> entries;
};

OverlapReport cross_relation_overlap(std::span<const CandidateSet> candidate_sets);

// Cluster output of one relation, bundled for reporting.
struct ClusterReport {
  Relation relation = Relation::LOCATION;
  Language language = Language::EN;
  std::vector<Cluster> suffix;
  std::vector<Cluster> prefix;
  std::vector<Cluster> derivational;
  std::vector<std::string> residual;
};

enum class ReportFormat { MARKDOWN, JSON };

// Deterministic report: the markdown layout places relations as en/hr column
// pairs with N/C/P rows; JSON mirrors the same data with stable key order.
std::string emit_report(std::span<const RelationScore> scores,
                        std::span<const OverlapReport> overlaps,
                        std::span<const ClusterReport> clusters, ReportFormat format);

void save_cluster_report(const ClusterReport& report, const std::string& path);
ClusterReport load_cluster_report(const std::string& path);

}  // namespace termex
