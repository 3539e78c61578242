#include "termex/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "termex/errors.hpp"
#include "termex/utf8.hpp"

namespace termex {

namespace {

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\v' ||
         cp == U'\f' || cp == 0xa0;
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
           (c >= '{' && c <= '~');
  }
  switch (cp) {
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018:
    case 0x2019:  // single quotes
    case 0x201c:
    case 0x201d:  // double quotes
    case 0xab:
    case 0xbb:    // guillemets
    case 0x2026:  // ellipsis
    case 0xb7:    // middle dot
      return true;
    default:
      return false;
  }
}

bool is_terminal_punct(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buf.str();
}

}  // namespace

bool is_word_char(char32_t cp) {
  return !is_space_cp(cp) && !is_punct_cp(cp);
}

bool is_letter(char32_t cp) {
  if (cp < 0x80)
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
  return is_word_char(cp);
}

bool token_is_word(std::string_view token) {
  std::size_t i = 0;
  while (i < token.size()) {
    std::size_t len;
    if (is_letter(utf8::decode_at(token, i, len))) return true;
    i += len;
  }
  return false;
}

CorpusStats operator+(const CorpusStats& a, const CorpusStats& b) {
  return {a.tokens + b.tokens, a.words + b.words, a.sentences + b.sentences,
          a.documents + b.documents};
}

Corpus ingest(std::vector<std::string> paths, Language language) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

  Corpus corpus;
  corpus.language = language;
  corpus.documents.reserve(paths.size());
  for (const auto& path : paths) {
    std::string text = read_file(path);
    const auto check = utf8::validate(text);
    if (!check.ok)
      throw DecodeError("invalid UTF-8 in " + path, check.error_offset);
    corpus.documents.push_back({path, language, std::move(text)});
  }
  return corpus;
}

Corpus tokenize(Corpus corpus, const TokenizerRules& rules) {
  corpus.sentences.assign(corpus.documents.size(), {});
  corpus.extra_tokens.assign(corpus.documents.size(), 0);

  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    const std::string& text = corpus.documents[d].text;
    auto& doc_sentences = corpus.sentences[d];
    std::uint64_t punct_tokens = 0;

    std::vector<std::string> sentence;
    std::string token;
    const auto flush_sentence = [&] {
      if (!sentence.empty()) {
        doc_sentences.push_back(std::move(sentence));
        sentence.clear();
      }
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
      std::size_t len;
      const char32_t cp = utf8::decode_at(text, i, len);
      if (is_space_cp(cp)) {
        i += len;
        continue;
      }
      if (is_punct_cp(cp)) {
        ++punct_tokens;
        const bool terminal = is_terminal_punct(cp);
        i += len;
        if (terminal) {
          // Boundary when followed by whitespace + capital, or end of text.
          std::size_t j = i;
          bool saw_space = false;
          while (j < n) {
            std::size_t l2;
            const char32_t next = utf8::decode_at(text, j, l2);
            if (is_space_cp(next)) {
              saw_space = true;
              j += l2;
              continue;
            }
            if (saw_space && utf8::is_upper(next)) flush_sentence();
            break;
          }
          if (j >= n) flush_sentence();
        }
        continue;
      }
      // Word/number token: maximal run of non-space, non-punctuation code points.
      token.clear();
      while (i < n) {
        std::size_t l2;
        const char32_t wc = utf8::decode_at(text, i, l2);
        if (!is_word_char(wc)) break;
        utf8::encode(rules.lowercase ? utf8::to_lower(wc) : wc, token);
        i += l2;
      }
      sentence.push_back(token);
    }
    flush_sentence();
    corpus.extra_tokens[d] = punct_tokens;
  }

  corpus.tokenized = true;
  return corpus;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  if (!corpus.tokenized && !corpus.documents.empty())
    throw DataError("corpus_stats requires a tokenized corpus");

  CorpusStats stats;
  stats.documents = corpus.documents.size();
  for (std::size_t d = 0; d < corpus.sentences.size(); ++d) {
    stats.tokens += corpus.extra_tokens[d];
    stats.sentences += corpus.sentences[d].size();
    for (const auto& sentence : corpus.sentences[d]) {
      stats.tokens += sentence.size();
      for (const auto& token : sentence)
        if (token_is_word(token)) ++stats.words;
    }
  }
  return stats;
}

}  // namespace termex
