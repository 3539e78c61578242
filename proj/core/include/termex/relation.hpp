#pragma once

#include <array>
#include <string>
#include <string_view>

#include "termex/errors.hpp"

namespace termex {

// The five semantic dimensions an adjective can express within a multi-word
// term, plus the two corpus languages.
enum class Relation { LOCATION, CAUSE, FORM, COMPOSITION, FUNCTION };
enum class Language { EN, HR };

inline constexpr std::array<Relation, 5> kAllRelations = {
    Relation::LOCATION, Relation::CAUSE, Relation::FORM, Relation::COMPOSITION,
    Relation::FUNCTION};

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LOCATION: return "location";
    case Relation::CAUSE: return "cause";
    case Relation::FORM: return "form";
    case Relation::COMPOSITION: return "composition";
    case Relation::FUNCTION: return "function";
  }
  return "?";
}

inline std::string_view to_string(Language l) {
  return l == Language::EN ? "en" : "hr";
}

Relation parse_relation(std::string_view text);
Language parse_language(std::string_view text);

}  // namespace termex
