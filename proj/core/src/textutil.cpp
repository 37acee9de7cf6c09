#include "tweetsent/textutil.hpp"

#include <functional>

namespace tweetsent {

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ascii_punct(char c) {
  auto u = static_cast<unsigned char>(c);
  return (u >= 0x21 && u <= 0x2f) || (u >= 0x3a && u <= 0x40) ||
         (u >= 0x5b && u <= 0x60) || (u >= 0x7b && u <= 0x7e);
}

bool is_word_char(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_';
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

DecodedChar decode_utf8(std::string_view s, std::size_t pos) {
  DecodedChar d;
  if (pos >= s.size()) return d;
  auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    d.cp = b0;
    d.size = 1;
    d.valid = true;
    return d;
  }
  int len = 0;
  char32_t cp = 0;
  char32_t min_cp = 0;
  if ((b0 & 0xe0) == 0xc0) {
    len = 2;
    cp = b0 & 0x1f;
    min_cp = 0x80;
  } else if ((b0 & 0xf0) == 0xe0) {
    len = 3;
    cp = b0 & 0x0f;
    min_cp = 0x800;
  } else if ((b0 & 0xf8) == 0xf0) {
    len = 4;
    cp = b0 & 0x07;
    min_cp = 0x10000;
  } else {
    return d;  // stray continuation or invalid lead byte
  }
  if (pos + static_cast<std::size_t>(len) > s.size()) return d;
  for (int i = 1; i < len; ++i) {
    auto b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(i)]);
    if ((b & 0xc0) != 0x80) return d;
    cp = (cp << 6) | (b & 0x3f);
  }
  // Reject overlong forms, surrogates, and out-of-range codepoints.
  if (cp < min_cp || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return d;
  d.cp = cp;
  d.size = len;
  d.valid = true;
  return d;
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x0009:
    case 0x000a:
    case 0x000b:
    case 0x000c:
    case 0x000d:
    case 0x0020:
    case 0x0085:
    case 0x00a0:
    case 0x1680:
    case 0x2000:
    case 0x2001:
    case 0x2002:
    case 0x2003:
    case 0x2004:
    case 0x2005:
    case 0x2006:
    case 0x2007:
    case 0x2008:
    case 0x2009:
    case 0x200a:
    case 0x2028:
    case 0x2029:
    case 0x202f:
    case 0x205f:
    case 0x3000:
      return true;
    default:
      return false;
  }
}

std::size_t count_codepoints(std::string_view s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    pos += static_cast<std::size_t>(decode_utf8(s, pos).size);
    ++n;
  }
  return n;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::size_t StringHash::operator()(std::string_view s) const noexcept {
  return std::hash<std::string_view>{}(s);
}

}  // namespace tweetsent
