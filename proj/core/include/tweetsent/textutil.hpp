#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace tweetsent {

// Locale-independent ASCII helpers. Bytes >= 0x80 are never letters,
// punctuation, or word characters here.
bool is_ascii_alpha(char c);
bool is_ascii_digit(char c);
bool is_ascii_punct(char c);
bool is_word_char(char c);  // [A-Za-z0-9_]
char ascii_lower(char c);
std::string ascii_lower(std::string_view s);

// Decodes the UTF-8 sequence starting at s[pos]. An invalid or truncated
// sequence yields valid == false with size == 1 so scanning always advances.
struct DecodedChar {
  char32_t cp = 0;
  int size = 1;
  bool valid = false;
};
DecodedChar decode_utf8(std::string_view s, std::size_t pos);

// Unicode whitespace per the White_Space property (Unicode 15.0).
bool is_unicode_space(char32_t cp);

// Codepoint count of a UTF-8 string; each invalid byte counts as one.
std::size_t count_codepoints(std::string_view s);

// FNV-1a 64-bit, used for content fingerprints.
std::uint64_t fnv1a64(std::string_view s);

// Heterogeneous-lookup string containers.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept;
};
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;
template <class V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

}  // namespace tweetsent
