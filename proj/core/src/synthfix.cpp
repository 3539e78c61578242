#include "termex/synthfix.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "termex/errors.hpp"
#include "termex/rng.hpp"

namespace termex {

using ordered_json = nlohmann::ordered_json;

void SynthSpec::validate() const {
  if (families.empty()) throw ConfigError("synthetic spec needs at least one family");
  if (noise_rate < 0.0 || noise_rate >= 1.0)
    throw ConfigError("noise_rate must be in [0, 1)");
  std::unordered_set<std::string> suffixes;
  for (const auto& family : families) {
    if (family.suffix.empty()) throw ConfigError("family suffix must be non-empty");
    if (family.members < 1) throw ConfigError("family needs at least one member word");
    if (!suffixes.insert(family.suffix).second)
      throw ConfigError("duplicate family suffix: " + family.suffix);
  }
  if (seeds_per_family < 2)
    throw ConfigError("seeds_per_family must be >= 2 for expansion");
  for (const auto& family : families)
    if (seeds_per_family > family.members)
      throw ConfigError("seeds_per_family exceeds family size");
}

bool SynthManifest::belongs_to(const std::string& word, Relation relation) const {
  for (const auto& family : families) {
    if (family.relation != relation) continue;
    if (std::find(family.members.begin(), family.members.end(), word) !=
        family.members.end())
      return true;
    if (std::find(family.context.begin(), family.context.end(), word) !=
        family.context.end())
      return true;
  }
  return false;
}

namespace {

constexpr const char* kConsonants = "bdfgklmnprstvz";
constexpr const char* kVowels = "aeiou";

std::string random_stem(Rng& rng) {
  const std::size_t syllables = 2 + rng.next_below(2);  // 4 or 6 letters
  std::string stem;
  for (std::size_t s = 0; s < syllables; ++s) {
    stem.push_back(kConsonants[rng.next_below(14)]);
    stem.push_back(kVowels[rng.next_below(5)]);
  }
  return stem;
}

// A fresh word that collides with nothing generated so far and carries no
// family suffix by accident (members get theirs appended on purpose).
std::string fresh_word(Rng& rng, std::unordered_set<std::string>& taken,
                       const std::vector<std::string>& suffixes,
                       const std::string& append_suffix) {
  for (;;) {
    std::string word = random_stem(rng);
    bool clean = true;
    for (const auto& suffix : suffixes)
      if (word.ends_with(suffix)) clean = false;
    if (!clean) continue;
    word += append_suffix;
    if (taken.insert(word).second) return word;
  }
}

}  // namespace

SynthResult generate(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.rng_seed);

  std::vector<std::string> suffixes;
  for (const auto& family : spec.families) suffixes.push_back(family.suffix);

  SynthResult result;
  result.manifest.language = spec.language;
  std::unordered_set<std::string> taken;

  for (const auto& family : spec.families) {
    SynthManifest::Family planted;
    planted.relation = family.relation;
    planted.suffix = family.suffix;
    for (std::size_t i = 0; i < family.members; ++i)
      planted.members.push_back(fresh_word(rng, taken, suffixes, family.suffix));
    for (std::size_t i = 0; i < family.context_words; ++i)
      planted.context.push_back(fresh_word(rng, taken, suffixes, ""));
    planted.seeds.assign(planted.members.begin(),
                         planted.members.begin() + spec.seeds_per_family);
    result.manifest.families.push_back(std::move(planted));
  }
  for (std::size_t i = 0; i < spec.noise_vocab; ++i)
    result.manifest.noise_words.push_back(fresh_word(rng, taken, suffixes, ""));

  std::string text;
  std::vector<std::string> tokens;
  for (std::size_t s = 0; s < spec.sentences; ++s) {
    const auto& family = result.manifest.families[rng.next_below(spec.families.size())];
    const std::size_t n_members = 3 + rng.next_below(3);   // 3..5
    const std::size_t n_context = 4 + rng.next_below(3);   // 4..6

    tokens.clear();
    const std::size_t total = n_members + n_context;
    std::size_t members_left = n_members;
    std::size_t context_left = n_context;
    for (std::size_t t = 0; t < total; ++t) {
      // Alternate context/member starting with context, padding with whichever
      // pool remains, so members sit inside their family's contexts.
      const bool pick_context =
          context_left > 0 && (members_left == 0 || t % 2 == 0);
      if (pick_context) {
        tokens.push_back(family.context[rng.next_below(family.context.size())]);
        --context_left;
      } else {
        tokens.push_back(family.members[rng.next_below(family.members.size())]);
        --members_left;
      }
      if (spec.noise_rate > 0.0 && rng.next_double() < spec.noise_rate)
        tokens.push_back(
            result.manifest.noise_words[rng.next_below(result.manifest.noise_words.size())]);
    }

    std::string sentence;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (t) sentence.push_back(' ');
      sentence += tokens[t];
    }
    sentence[0] = static_cast<char>(sentence[0] - 0x20);  // capitalize: ASCII stems
    sentence.push_back('.');
    text += sentence;
    text.push_back('\n');
  }

  result.document = std::move(text);
  Corpus corpus;
  corpus.language = spec.language;
  corpus.documents.push_back({"synthetic.txt", spec.language, result.document});
  result.corpus = tokenize(std::move(corpus));
  return result;
}

SynthSpec load_synth_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }

  SynthSpec spec;
  if (doc.contains("language"))
    spec.language = parse_language(doc["language"].get<std::string>());
  spec.sentences = doc.value("sentences", spec.sentences);
  spec.rng_seed = doc.value("rng_seed", spec.rng_seed);
  spec.noise_rate = doc.value("noise_rate", spec.noise_rate);
  spec.noise_vocab = doc.value("noise_vocab", spec.noise_vocab);
  spec.seeds_per_family = doc.value("seeds_per_family", spec.seeds_per_family);
  for (const auto& item : doc.at("families")) {
    SynthFamily family;
    family.relation = parse_relation(item.at("relation").get<std::string>());
    family.suffix = item.at("suffix").get<std::string>();
    family.members = item.value("members", family.members);
    family.context_words = item.value("context_words", family.context_words);
    spec.families.push_back(std::move(family));
  }
  spec.validate();
  return spec;
}

void save_manifest(const SynthManifest& manifest, const std::string& path) {
  ordered_json doc;
  doc["language"] = to_string(manifest.language);
  doc["families"] = ordered_json::array();
  for (const auto& family : manifest.families) {
    ordered_json entry;
    entry["relation"] = to_string(family.relation);
    entry["suffix"] = family.suffix;
    entry["members"] = family.members;
    entry["seeds"] = family.seeds;
    entry["context"] = family.context;
    doc["families"].push_back(std::move(entry));
  }
  doc["noise_words"] = manifest.noise_words;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

SynthManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read file: " + path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
  SynthManifest manifest;
  manifest.language = parse_language(doc.at("language").get<std::string>());
  for (const auto& entry : doc.at("families")) {
    SynthManifest::Family family;
    family.relation = parse_relation(entry.at("relation").get<std::string>());
    family.suffix = entry.at("suffix").get<std::string>();
    family.members = entry.at("members").get<std::vector<std::string>>();
    family.seeds = entry.at("seeds").get<std::vector<std::string>>();
    family.context = entry.at("context").get<std::vector<std::string>>();
    manifest.families.push_back(std::move(family));
  }
  manifest.noise_words = doc.at("noise_words").get<std::vector<std::string>>();
  return manifest;
}

std::vector<RelationSpec> manifest_seed_specs(const SynthManifest& manifest) {
  std::vector<RelationSpec> specs;
  for (const auto& family : manifest.families) {
    RelationSpec spec;
    spec.relation = family.relation;
    spec.language = manifest.language;
    spec.seeds = family.seeds;
    spec.validate();
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::string manifest_gold_tsv(const SynthManifest& manifest) {
  std::string out;
  for (const auto& family : manifest.families) {
    for (const auto& word : family.members)
      out += word + "\t" + std::string(to_string(family.relation)) + "\n";
    for (const auto& word : family.context)
      out += word + "\t" + std::string(to_string(family.relation)) + "\n";
  }
  return out;
}

}  // namespace termex
