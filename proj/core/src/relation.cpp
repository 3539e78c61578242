#include "termex/relation.hpp"

#include <algorithm>
#include <cctype>

namespace termex {

namespace {

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Relation parse_relation(std::string_view text) {
  const std::string t = ascii_lower(text);
  for (Relation r : kAllRelations)
    if (t == to_string(r)) return r;
  throw DataError("unknown relation: " + std::string(text));
}

Language parse_language(std::string_view text) {
  const std::string t = ascii_lower(text);
  if (t == "en") return Language::EN;
  if (t == "hr" || t == "cr") return Language::HR;
  throw DataError("unknown language: " + std::string(text));
}

}  // namespace termex
