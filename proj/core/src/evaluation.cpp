#include "termex/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "termex/errors.hpp"
#include "termex/utf8.hpp"

namespace termex {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string ascii_lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c += 0x20;
  return s;
}

// Column order of the published precision table.
constexpr Relation kReportOrder[] = {Relation::LOCATION, Relation::FUNCTION,
                                     Relation::FORM, Relation::COMPOSITION,
                                     Relation::CAUSE};

std::string display_affix(const Cluster& cluster) {
  switch (cluster.kind) {
    case ClusterKind::SUFFIX: return "-" + cluster.affix;
    case ClusterKind::PREFIX: return cluster.affix + "-";
    case ClusterKind::DERIVATIONAL: return cluster.affix;
  }
  return cluster.affix;
}

std::string join(std::span<const std::string> words, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

ordered_json clusters_to_json(std::span<const Cluster> clusters) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : clusters) {
    ordered_json entry;
    entry["affix"] = c.affix;
    entry["anchor_seeds"] = c.anchor_seeds;
    entry["members"] = c.members;
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::vector<Cluster> clusters_from_json(const ordered_json& arr, ClusterKind kind) {
  std::vector<Cluster> out;
  for (const auto& entry : arr) {
    Cluster c;
    c.kind = kind;
    c.affix = entry.at("affix").get<std::string>();
    c.anchor_seeds = entry.at("anchor_seeds").get<std::vector<std::string>>();
    c.members = entry.at("members").get<std::vector<std::string>>();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::string RelationScore::precision_text() const {
  if (!precision_hundredths) return "n/a";
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%d.%02d", *precision_hundredths / 100,
                *precision_hundredths % 100);
  return buf;
}

GoldAnnotation load_gold(const std::string& path, Relation relation, Language language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);

  GoldAnnotation gold;
  gold.relation = relation;
  gold.language = language;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xef\xbb\xbf")) line.erase(0, 3);
    if (line.empty()) continue;

    const auto check = utf8::validate(line);
    if (!check.ok) throw ParseError("invalid UTF-8 in " + path, line_no);

    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw ParseError("expected 'word<TAB>verdict' in " + path, line_no);
    if (line.find('\t', tab + 1) != std::string::npos)
      throw ParseError("too many columns in " + path, line_no);

    const std::string word = line.substr(0, tab);
    const std::string value = ascii_lower(line.substr(tab + 1));

    Verdict verdict;
    if (value == "correct") {
      verdict = Verdict::CORRECT;
    } else if (value == "incorrect") {
      verdict = Verdict::INCORRECT;
    } else {
      Relation label;
      try {
        label = parse_relation(value);
      } catch (const DataError&) {
        throw ParseError("unknown verdict '" + value + "' in " + path, line_no);
      }
      verdict = label == relation ? Verdict::CORRECT : Verdict::INCORRECT;
    }

    const auto [it, inserted] = gold.judgments.emplace(word, verdict);
    if (!inserted && it->second != verdict)
      throw ParseError("conflicting verdicts for '" + word + "' in " + path, line_no);
  }
  return gold;
}

RelationScore make_relation_score(Relation relation, Language language,
                                  std::uint64_t n_extracted, std::uint64_t n_correct,
                                  std::uint64_t n_unjudged) {
  if (n_correct > n_extracted)
    throw DataError("n_correct exceeds n_extracted");
  RelationScore score;
  score.relation = relation;
  score.language = language;
  score.n_extracted = n_extracted;
  score.n_correct = n_correct;
  score.n_unjudged = n_unjudged;
  if (n_extracted > 0) {
    // round-half-up(100 * c / n) without floating point
    score.precision_hundredths =
        static_cast<int>((200 * n_correct + n_extracted) / (2 * n_extracted));
  }
  return score;
}

RelationScore score(const CandidateSet& candidates, const GoldAnnotation& gold) {
  if (candidates.spec.relation != gold.relation ||
      candidates.spec.language != gold.language)
    throw DataError("gold annotation does not match the candidate set");

  std::uint64_t correct = 0;
  std::uint64_t unjudged = 0;
  for (const auto& candidate : candidates.candidates) {
    const auto it = gold.judgments.find(candidate.word);
    if (it == gold.judgments.end())
      ++unjudged;
    else if (it->second == Verdict::CORRECT)
      ++correct;
  }
  return make_relation_score(gold.relation, gold.language, candidates.candidates.size(),
                             correct, unjudged);
}

OverlapReport cross_relation_overlap(std::span<const CandidateSet> candidate_sets) {
  if (candidate_sets.size() < 2)
    throw std::invalid_argument("overlap detection requires at least 2 candidate sets");

  const Language language = candidate_sets.front().spec.language;
  std::set<Relation> seen;
  for (const auto& set : candidate_sets) {
    if (set.spec.language != language)
      throw DataError("overlap detection requires candidate sets of one language");
    if (!seen.insert(set.spec.relation).second)
      throw DataError("duplicate candidate set for relation " +
                      std::string(to_string(set.spec.relation)));
  }

  std::map<std::string, std::vector<Relation>> by_word;
  for (const auto& set : candidate_sets)
    for (const auto& candidate : set.candidates)
      by_word[candidate.word].push_back(set.spec.relation);

  OverlapReport report;
  report.language = language;
  for (auto& [word, relations] : by_word) {
    if (relations.size() < 2) continue;
    std::sort(relations.begin(), relations.end());
    report.entries.emplace_back(word, std::move(relations));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& a, const auto& b) {
              if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
              return a.first < b.first;
            });
  return report;
}

namespace {

std::string markdown_report(std::span<const RelationScore> scores,
                            std::span<const OverlapReport> overlaps,
                            std::span<const ClusterReport> clusters) {
  std::ostringstream out;
  out << "# termex report\n\n";

  out << "## Precision by relation\n\n";
  if (scores.empty()) {
    out << "no data\n\n";
  } else {
    // Columns: relation x language pairs present in the scores, in fixed order.
    std::vector<std::pair<Relation, Language>> columns;
    for (const Relation r : kReportOrder)
      for (const Language l : {Language::EN, Language::HR})
        for (const auto& s : scores)
          if (s.relation == r && s.language == l) {
            columns.emplace_back(r, l);
            break;
          }

    out << "| |";
    for (const auto& [r, l] : columns) out << ' ' << to_string(r) << ' ' << to_string(l) << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < columns.size(); ++i) out << "---|";
    out << '\n';

    const auto cell = [&](Relation r, Language l) -> const RelationScore* {
      for (const auto& s : scores)
        if (s.relation == r && s.language == l) return &s;
      return nullptr;
    };
    out << "| N |";
    for (const auto& [r, l] : columns) out << ' ' << cell(r, l)->n_extracted << " |";
    out << "\n| C |";
    for (const auto& [r, l] : columns) out << ' ' << cell(r, l)->n_correct << " |";
    out << "\n| P |";
    for (const auto& [r, l] : columns) out << ' ' << cell(r, l)->precision_text() << " |";
    out << "\n\n";

    std::uint64_t unjudged = 0;
    for (const auto& s : scores) unjudged += s.n_unjudged;
    if (unjudged > 0) {
      out << "Unjudged candidates (count toward N only):";
      for (const auto& s : scores)
        if (s.n_unjudged > 0)
          out << ' ' << to_string(s.relation) << '/' << to_string(s.language) << '='
              << s.n_unjudged;
      out << "\n\n";
    }
  }

  out << "## Cross-relation overlaps\n\n";
  bool any_overlap = false;
  for (const auto& report : overlaps) {
    if (report.entries.empty()) continue;
    any_overlap = true;
    out << "### " << to_string(report.language) << "\n\n";
    for (const auto& [word, relations] : report.entries) {
      out << "- " << word << ':';
      for (std::size_t i = 0; i < relations.size(); ++i)
        out << (i ? ", " : " ") << to_string(relations[i]);
      out << '\n';
    }
    out << '\n';
  }
  if (!any_overlap) out << "no data\n\n";

  out << "## Affix clusters\n\n";
  if (clusters.empty()) {
    out << "no data\n";
  } else {
    for (const auto& report : clusters) {
      out << "### " << to_string(report.relation) << " (" << to_string(report.language)
          << ")\n\n";
      const auto emit_group = [&](std::string_view title, std::span<const Cluster> group) {
        if (group.empty()) return;
        out << "**" << title << "**\n\n";
        for (const auto& cluster : group) {
          out << "- " << display_affix(cluster) << " (" << cluster.members.size()
              << "): " << join(cluster.members);
          if (!cluster.anchor_seeds.empty())
            out << " [seeds: " << join(cluster.anchor_seeds) << "]";
          out << '\n';
        }
        out << '\n';
      };
      emit_group("Suffix clusters", report.suffix);
      emit_group("Prefix clusters", report.prefix);
      emit_group("Derivational clusters", report.derivational);
      if (!report.residual.empty())
        out << "No group: " << join(report.residual) << "\n\n";
    }
  }
  return out.str();
}

std::string json_report(std::span<const RelationScore> scores,
                        std::span<const OverlapReport> overlaps,
                        std::span<const ClusterReport> clusters) {
  ordered_json doc;
  doc["scores"] = ordered_json::array();
  for (const auto& s : scores) {
    ordered_json entry;
    entry["relation"] = to_string(s.relation);
    entry["language"] = to_string(s.language);
    entry["n_extracted"] = s.n_extracted;
    entry["n_correct"] = s.n_correct;
    entry["n_unjudged"] = s.n_unjudged;
    if (s.precision())
      entry["precision"] = *s.precision();
    else
      entry["precision"] = nullptr;
    doc["scores"].push_back(std::move(entry));
  }

  doc["overlaps"] = ordered_json::array();
  for (const auto& report : overlaps) {
    ordered_json entry;
    entry["language"] = to_string(report.language);
    entry["words"] = ordered_json::array();
    for (const auto& [word, relations] : report.entries) {
      ordered_json item;
      item["word"] = word;
      item["relations"] = ordered_json::array();
      for (const Relation r : relations) item["relations"].push_back(to_string(r));
      entry["words"].push_back(std::move(item));
    }
    doc["overlaps"].push_back(std::move(entry));
  }

  doc["clusters"] = ordered_json::array();
  for (const auto& report : clusters) {
    ordered_json entry;
    entry["relation"] = to_string(report.relation);
    entry["language"] = to_string(report.language);
    entry["suffix"] = clusters_to_json(report.suffix);
    entry["prefix"] = clusters_to_json(report.prefix);
    entry["derivational"] = clusters_to_json(report.derivational);
    entry["residual"] = report.residual;
    doc["clusters"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(std::span<const RelationScore> scores,
                        std::span<const OverlapReport> overlaps,
                        std::span<const ClusterReport> clusters, ReportFormat format) {
  return format == ReportFormat::MARKDOWN ? markdown_report(scores, overlaps, clusters)
                                          : json_report(scores, overlaps, clusters);
}

void save_cluster_report(const ClusterReport& report, const std::string& path) {
  ordered_json doc;
  doc["relation"] = to_string(report.relation);
  doc["language"] = to_string(report.language);
  doc["suffix"] = clusters_to_json(report.suffix);
  doc["prefix"] = clusters_to_json(report.prefix);
  doc["derivational"] = clusters_to_json(report.derivational);
  doc["residual"] = report.residual;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

ClusterReport load_cluster_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
  ClusterReport report;
  report.relation = parse_relation(doc.at("relation").get<std::string>());
  report.language = parse_language(doc.at("language").get<std::string>());
  report.suffix = clusters_from_json(doc.at("suffix"), ClusterKind::SUFFIX);
  report.prefix = clusters_from_json(doc.at("prefix"), ClusterKind::PREFIX);
  report.derivational = clusters_from_json(doc.at("derivational"), ClusterKind::DERIVATIONAL);
  report.residual = doc.at("residual").get<std::vector<std::string>>();
  return report;
}

}  // namespace termex
