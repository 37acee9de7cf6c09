#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tweetsent/wordlist.hpp"

namespace tweetsent {

enum class TokenKind { word, hashtag, mention, url, emoticon };

std::string_view to_string(TokenKind kind);

struct Token {
  std::string surface;  // nonempty; word/hashtag/mention lowercase, url verbatim
  TokenKind kind;
  std::size_t begin = 0;  // byte offsets into the tokenized text, begin < end
  std::size_t end = 0;
};

// Splits on Unicode whitespace and classifies each chunk:
//   url       case-insensitive "http://" or "https://" prefix, kept verbatim
//   mention   '@' followed by [A-Za-z0-9_]+; the maximal run, lowercased
//   hashtag   '#' followed by [A-Za-z0-9_]+; the maximal run, lowercased
//   emoticon  exact member of the emoticon table
//   word      anything else, ASCII punctuation stripped from both ends and
//             lowercased; a stripped chunk is re-classified from the top
// Total: never fails, accepts arbitrary bytes. Spans are strictly
// increasing and non-overlapping.
std::vector<Token> tokenize(std::string_view text, const EmoticonSet& emoticons);
std::vector<Token> tokenize(std::string_view text);

}  // namespace tweetsent
