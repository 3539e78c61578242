#include "termex/morphology.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "termex/errors.hpp"
#include "termex/utf8.hpp"

namespace termex {

namespace {

std::vector<std::string> sorted_unique(std::span<const std::string> words) {
  std::vector<std::string> out(words.begin(), words.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Affixes of `word` with code-point lengths in [min_len, max_len], strictly
// shorter than the word itself.
std::vector<std::string> affixes_of(const std::string& word, bool suffix,
                                    std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> out;
  const auto offsets = utf8::codepoint_offsets(word);
  const std::size_t cp_len = offsets.size() - 1;
  if (cp_len == 0) return out;
  const std::size_t hi = std::min(max_len, cp_len - 1);
  for (std::size_t len = min_len; len <= hi; ++len) {
    if (suffix)
      out.push_back(word.substr(offsets[cp_len - len]));
    else
      out.push_back(word.substr(0, offsets[len]));
  }
  return out;
}

std::vector<Cluster> affix_clusters(std::span<const std::string> candidates,
                                    std::span<const std::string> seeds,
                                    const ClusterConfig& config, bool suffix) {
  const auto words = sorted_unique(candidates);

  std::map<std::string, std::vector<std::string>> members_by_affix;
  for (const auto& word : words)
    for (auto& affix : affixes_of(word, suffix, config.min_affix_len, config.max_affix_len))
      members_by_affix[std::move(affix)].push_back(word);

  // Keep only the longest affix per member set: any shorter affix shared by
  // the identical members is a tail (or head) of it and adds nothing.
  std::map<std::vector<std::string>, std::string> best_affix;
  for (auto& [affix, members] : members_by_affix) {
    if (members.size() < config.min_cluster_size) continue;
    auto [it, inserted] = best_affix.try_emplace(members, affix);
    if (!inserted && utf8::length(affix) > utf8::length(it->second)) it->second = affix;
  }

  const auto seed_list = sorted_unique(seeds);
  std::vector<Cluster> clusters;
  clusters.reserve(best_affix.size());
  for (auto& [members, affix] : best_affix) {
    Cluster cluster;
    cluster.kind = suffix ? ClusterKind::SUFFIX : ClusterKind::PREFIX;
    cluster.affix = affix;
    cluster.members = members;
    const std::size_t affix_cp = utf8::length(affix);
    for (const auto& seed : seed_list) {
      if (utf8::length(seed) <= affix_cp) continue;
      const bool matches = suffix ? seed.ends_with(affix) : seed.starts_with(affix);
      if (matches) cluster.anchor_seeds.push_back(seed);
    }
    clusters.push_back(std::move(cluster));
  }

  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.affix < b.affix;
  });
  return clusters;
}

std::size_t common_prefix_cp(const std::string& a, const std::string& b) {
  const auto oa = utf8::codepoint_offsets(a);
  const auto ob = utf8::codepoint_offsets(b);
  const std::size_t max = std::min(oa.size(), ob.size()) - 1;
  std::size_t len = 0;
  for (; len < max; ++len) {
    const std::string_view ca(a.data() + oa[len], oa[len + 1] - oa[len]);
    const std::string_view cb(b.data() + ob[len], ob[len + 1] - ob[len]);
    if (ca != cb) break;
  }
  return len;
}

}  // namespace

std::vector<Cluster> suffix_clusters(std::span<const std::string> candidates,
                                     std::span<const std::string> seeds,
                                     const ClusterConfig& config) {
  return affix_clusters(candidates, seeds, config, /*suffix=*/true);
}

std::vector<Cluster> prefix_clusters(std::span<const std::string> candidates,
                                     std::span<const std::string> seeds,
                                     const ClusterConfig& config) {
  return affix_clusters(candidates, seeds, config, /*suffix=*/false);
}

std::vector<Cluster> derivational_clusters(std::span<const std::string> candidates,
                                           std::span<const std::string> term_lexicon,
                                           const ClusterConfig& config) {
  if (term_lexicon.empty())
    throw std::invalid_argument("derivational clustering requires a term lexicon");

  const auto words = sorted_unique(candidates);
  const auto terms = sorted_unique(term_lexicon);

  std::map<std::string, std::vector<std::string>> members_by_term;
  for (const auto& term : terms) {
    const std::size_t term_cp = utf8::length(term);
    const std::size_t needed =
        std::max(config.min_stem_len, term_cp >= 2 ? term_cp - 2 : 0);
    for (const auto& word : words)
      if (common_prefix_cp(word, term) >= needed) members_by_term[term].push_back(word);
  }

  std::vector<Cluster> clusters;
  clusters.reserve(members_by_term.size());
  for (auto& [term, members] : members_by_term) {
    Cluster cluster;
    cluster.kind = ClusterKind::DERIVATIONAL;
    cluster.affix = term;
    cluster.members = std::move(members);
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.affix < b.affix;
  });
  return clusters;
}

std::vector<std::string> residual(std::span<const std::string> candidates,
                                  std::span<const Cluster> clusters) {
  std::unordered_set<std::string> covered;
  for (const auto& cluster : clusters)
    covered.insert(cluster.members.begin(), cluster.members.end());

  std::vector<std::string> out;
  for (const auto& word : sorted_unique(candidates))
    if (!covered.count(word)) out.push_back(word);
  return out;
}

std::vector<std::string> read_word_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);

  std::vector<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xef\xbb\xbf")) line.erase(0, 3);
    // Trim ASCII blanks.
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    std::string word = line.substr(begin, last - begin + 1);
    const auto check = utf8::validate(word);
    if (!check.ok) throw ParseError("invalid UTF-8 in " + path, line_no);
    words.push_back(std::move(word));
  }
  return words;
}

}  // namespace termex
