#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace termex {

enum class ClusterKind { SUFFIX, PREFIX, DERIVATIONAL };

// A group of candidate words sharing an affix (SUFFIX/PREFIX) or derived from
// one lexicon term (DERIVATIONAL, where `affix` holds the term). Anchor seeds
// are the seeds exhibiting the same affix; an empty list marks a cluster not
// corresponding to any seed.
struct Cluster {
  ClusterKind kind = ClusterKind::SUFFIX;
  std::string affix;
  std::vector<std::string> anchor_seeds;  // sorted
  std::vector<std::string> members;       // sorted, deduplicated
};

struct ClusterConfig {
  std::size_t min_affix_len = 3;
  std::size_t max_affix_len = 10;
  std::size_t min_cluster_size = 2;  // applies to SUFFIX/PREFIX clusters
  std::size_t min_stem_len = 4;      // derivational stem overlap floor
};

// Every suffix (length in [min_affix_len, max_affix_len], and strictly shorter
// than the word) shared by at least min_cluster_size candidates yields a
// cluster; nested suffixes covering an identical member set collapse into the
// longest one. A word may sit in several clusters. Output is sorted by
// (member count desc, affix asc). Affix lengths count code points.
std::vector<Cluster> suffix_clusters(std::span<const std::string> candidates,
                                     std::span<const std::string> seeds,
                                     const ClusterConfig& config = {});

// Mirror image of suffix_clusters on word beginnings.
std::vector<Cluster> prefix_clusters(std::span<const std::string> candidates,
                                     std::span<const std::string> seeds,
                                     const ClusterConfig& config = {});

// Matches candidates to lexicon terms by stem overlap: the longest common
// prefix must reach both min_stem_len and len(term) - 2. Each matched term
// yields one cluster (single-member clusters included). Throws
// std::invalid_argument on an empty lexicon.
std::vector<Cluster> derivational_clusters(std::span<const std::string> candidates,
                                           std::span<const std::string> term_lexicon,
                                           const ClusterConfig& config = {});

// Candidates belonging to no cluster, sorted lexicographically.
std::vector<std::string> residual(std::span<const std::string> candidates,
                                  std::span<const Cluster> clusters);

// One word per line, UTF-8; blank lines skipped. Used for candidate fixtures
// and term lexicons.
std::vector<std::string> read_word_list(const std::string& path);

}  // namespace termex
