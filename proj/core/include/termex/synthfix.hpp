#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "termex/corpus.hpp"
#include "termex/expansion.hpp"
#include "termex/relation.hpp"

namespace termex {

// One planted word family: `members` suffix-bearing words that only ever
// co-occur with each other and with the family's context words.
struct SynthFamily {
  Relation relation = Relation::CAUSE;
  std::string suffix;
  std::size_t members = 20;
  std::size_t context_words = 35;
};

struct SynthSpec {
  Language language = Language::EN;
  std::vector<SynthFamily> families;
  std::size_t sentences = 5000;
  std::uint64_t rng_seed = 42;
  double noise_rate = 0.05;        // chance of a noise token after each content token
  std::size_t noise_vocab = 30;    // distinct noise words
  std::size_t seeds_per_family = 5;

  void validate() const;  // throws ConfigError
};

// Ground truth for every planted word. Family vocabularies are disjoint.
struct SynthManifest {
  struct Family {
    Relation relation;
    std::string suffix;
    std::vector<std::string> members;  // generation order; first seeds_per_family are seeds
    std::vector<std::string> seeds;
    std::vector<std::string> context;
  };
  Language language = Language::EN;
  std::vector<Family> families;
  std::vector<std::string> noise_words;

  // True when the word is a member or context word of the given relation.
  bool belongs_to(const std::string& word, Relation relation) const;
};

struct SynthResult {
  Corpus corpus;             // tokenized with default rules
  std::string document;      // raw text, one sentence per line
  SynthManifest manifest;
};

// Deterministic generation: the same spec always produces byte-identical
// text and manifest. Sentences draw one family and interleave its context
// words with family members; noise tokens are sprinkled at noise_rate.
SynthResult generate(const SynthSpec& spec);

SynthSpec load_synth_spec(const std::string& path);
void save_manifest(const SynthManifest& manifest, const std::string& path);
SynthManifest load_manifest(const std::string& path);

// Seed lists (first seeds_per_family members per family) in expansion format.
std::vector<RelationSpec> manifest_seed_specs(const SynthManifest& manifest);

// Gold TSV for one relation: every planted word labeled with its family's
// relation, so scoring marks same-family words CORRECT and the rest INCORRECT.
std::string manifest_gold_tsv(const SynthManifest& manifest);

}  // namespace termex
