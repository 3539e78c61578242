#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termex::utf8 {

struct ValidationResult {
  bool ok = true;
  std::size_t error_offset = 0;  // byte offset of the first invalid sequence
};

// Structural UTF-8 validation: sequence lengths, continuation bytes, overlong
// encodings, surrogates and the U+10FFFF ceiling.
ValidationResult validate(std::string_view bytes);

// Byte offsets of every code point start plus a final end-of-string sentinel,
// so offsets.size() == cp_count + 1. Input must be valid UTF-8.
std::vector<std::size_t> codepoint_offsets(std::string_view s);

// Number of code points in a valid UTF-8 string.
std::size_t length(std::string_view s);

// Decodes the code point starting at `offset`; stores its byte length.
char32_t decode_at(std::string_view s, std::size_t offset, std::size_t& byte_len);

void encode(char32_t cp, std::string& out);

// Simple case folding for the Latin range this project handles (ASCII,
// Latin-1 supplement, Latin Extended-A). Other code points pass through.
char32_t to_lower(char32_t cp);

inline bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

std::string lower(std::string_view s);

}  // namespace termex::utf8
