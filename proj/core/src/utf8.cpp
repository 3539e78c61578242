#include "termex/utf8.hpp"

namespace termex::utf8 {

namespace {

inline bool is_continuation(unsigned char b) { return (b & 0xc0) == 0x80; }

}  // namespace

ValidationResult validate(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      i += 1;
      continue;
    } else if ((b0 & 0xe0) == 0xc0) {
      len = 2;
      cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
      len = 3;
      cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return {false, i};
    }
    if (i + len > n) return {false, i};
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = static_cast<unsigned char>(bytes[i + k]);
      if (!is_continuation(bk)) return {false, i};
      cp = (cp << 6) | (bk & 0x3f);
    }
    // Overlong encodings, UTF-16 surrogates and out-of-range values are invalid.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000))
      return {false, i};
    if (cp >= 0xd800 && cp <= 0xdfff) return {false, i};
    if (cp > 0x10ffff) return {false, i};
    i += len;
  }
  return {true, 0};
}

std::vector<std::size_t> codepoint_offsets(std::string_view s) {
  std::vector<std::size_t> offsets;
  offsets.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size();) {
    offsets.push_back(i);
    const unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80)
      i += 1;
    else if ((b & 0xe0) == 0xc0)
      i += 2;
    else if ((b & 0xf0) == 0xe0)
      i += 3;
    else
      i += 4;
  }
  offsets.push_back(s.size());
  return offsets;
}

std::size_t length(std::string_view s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size();) {
    const unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80)
      i += 1;
    else if ((b & 0xe0) == 0xc0)
      i += 2;
    else if ((b & 0xf0) == 0xe0)
      i += 3;
    else
      i += 4;
    ++count;
  }
  return count;
}

char32_t decode_at(std::string_view s, std::size_t offset, std::size_t& byte_len) {
  const unsigned char b0 = static_cast<unsigned char>(s[offset]);
  if (b0 < 0x80) {
    byte_len = 1;
    return b0;
  }
  if ((b0 & 0xe0) == 0xc0) {
    byte_len = 2;
    return ((b0 & 0x1f) << 6) | (static_cast<unsigned char>(s[offset + 1]) & 0x3f);
  }
  if ((b0 & 0xf0) == 0xe0) {
    byte_len = 3;
    return ((b0 & 0x0f) << 12) | ((static_cast<unsigned char>(s[offset + 1]) & 0x3f) << 6) |
           (static_cast<unsigned char>(s[offset + 2]) & 0x3f);
  }
  byte_len = 4;
  return ((char32_t(b0) & 0x07) << 18) |
         ((static_cast<unsigned char>(s[offset + 1]) & 0x3f) << 12) |
         ((static_cast<unsigned char>(s[offset + 2]) & 0x3f) << 6) |
         (static_cast<unsigned char>(s[offset + 3]) & 0x3f);
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 supplement uppercase, excluding the multiplication sign.
  if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) return cp + 0x20;
  // Latin Extended-A pairs: even upper / odd lower.
  if (cp >= 0x100 && cp <= 0x137 && (cp % 2) == 0) return cp + 1;
  if (cp >= 0x139 && cp <= 0x148 && (cp % 2) == 1) return cp + 1;
  if (cp >= 0x14a && cp <= 0x177 && (cp % 2) == 0) return cp + 1;
  if (cp == 0x178) return 0xff;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17e && (cp % 2) == 1) return cp + 1;
  return cp;
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t len;
    const char32_t cp = decode_at(s, i, len);
    encode(to_lower(cp), out);
    i += len;
  }
  return out;
}

}  // namespace termex::utf8
