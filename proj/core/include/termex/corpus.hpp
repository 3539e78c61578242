#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "termex/relation.hpp"

namespace termex {

struct Document {
  std::string id;
  Language language = Language::EN;
  std::string text;
};

struct TokenizerRules {
  bool lowercase = true;
};

// A set of documents in one language. `tokenize` fills `sentences` (word and
// number tokens, one vector per sentence) and `extra_tokens` (punctuation
// tokens, which count toward the token total but never join a sentence).
struct Corpus {
  Language language = Language::EN;
  std::vector<Document> documents;
  std::vector<std::vector<std::vector<std::string>>> sentences;  // per document
  std::vector<std::uint64_t> extra_tokens;                       // per document
  bool tokenized = false;
};

struct CorpusStats {
  std::uint64_t tokens = 0;
  std::uint64_t words = 0;  // tokens containing at least one letter
  std::uint64_t sentences = 0;
  std::uint64_t documents = 0;

  bool operator==(const CorpusStats&) const = default;
};

CorpusStats operator+(const CorpusStats& a, const CorpusStats& b);

// Reads each path as a UTF-8 text file and returns one Document per file,
// ordered by path. Throws IoError for unreadable files and DecodeError
// (with byte offset) for invalid UTF-8.
Corpus ingest(std::vector<std::string> paths, Language language);

// Splits documents into sentences and tokens. Sentence boundaries are a
// terminal mark (. ! ?) followed by whitespace and a capital, or end of text.
// Tokens are maximal letter/digit runs; punctuation marks are standalone
// tokens counted per document.
Corpus tokenize(Corpus corpus, const TokenizerRules& rules = {});

CorpusStats corpus_stats(const Corpus& corpus);

// Character classes used by the tokenizer; exposed for the vocabulary
// builder, which keeps only tokens containing at least one letter.
bool is_word_char(char32_t cp);
bool is_letter(char32_t cp);
bool token_is_word(std::string_view token);

}  // namespace termex
