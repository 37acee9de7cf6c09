#include "tweetsent/tokenizer.hpp"

#include "tweetsent/textutil.hpp"

namespace tweetsent {

namespace {

bool has_url_prefix(std::string_view chunk) {
  constexpr std::string_view kHttp = "http://";
  constexpr std::string_view kHttps = "https://";
  auto ci_prefix = [&](std::string_view prefix) {
    if (chunk.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (ascii_lower(chunk[i]) != prefix[i]) return false;
    return true;
  };
  return ci_prefix(kHttp) || ci_prefix(kHttps);
}

// Classifies text[begin, end) and appends at most one token. The loop is
// the punctuation-strip re-classification: a stripped chunk goes back
// through every rule so the emitted kind matches what a fresh tokenize of
// the surface would produce.
void classify_chunk(std::string_view text, std::size_t begin, std::size_t end,
                    const EmoticonSet& emoticons, std::vector<Token>& out) {
  while (begin < end) {
    std::string_view chunk = text.substr(begin, end - begin);
    if (has_url_prefix(chunk)) {
      out.push_back({std::string(chunk), TokenKind::url, begin, end});
      return;
    }
    if (chunk.size() >= 2 && (chunk[0] == '@' || chunk[0] == '#') &&
        is_word_char(chunk[1])) {
      std::size_t run = 2;
      while (run < chunk.size() && is_word_char(chunk[run])) ++run;
      TokenKind kind =
          chunk[0] == '@' ? TokenKind::mention : TokenKind::hashtag;
      // The maximal sigil+word run is the token; any tail is discarded.
      out.push_back(
          {ascii_lower(chunk.substr(0, run)), kind, begin, begin + run});
      return;
    }
    if (emoticons.find(chunk) != emoticons.end()) {
      out.push_back({std::string(chunk), TokenKind::emoticon, begin, end});
      return;
    }
    std::size_t b = begin;
    std::size_t e = end;
    while (b < e && is_ascii_punct(text[b])) ++b;
    while (e > b && is_ascii_punct(text[e - 1])) --e;
    if (b == e) return;  // pure punctuation, dropped
    if (b != begin || e != end) {
      begin = b;
      end = e;
      continue;
    }
    out.push_back({ascii_lower(chunk), TokenKind::word, begin, end});
    return;
  }
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::word:
      return "word";
    case TokenKind::hashtag:
      return "hashtag";
    case TokenKind::mention:
      return "mention";
    case TokenKind::url:
      return "url";
    case TokenKind::emoticon:
      return "emoticon";
  }
  return "word";
}

std::vector<Token> tokenize(std::string_view text,
                            const EmoticonSet& emoticons) {
  std::vector<Token> out;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t chunk_begin = kNone;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto d = decode_utf8(text, pos);
    bool space = d.valid && is_unicode_space(d.cp);
    if (space) {
      if (chunk_begin != kNone) {
        classify_chunk(text, chunk_begin, pos, emoticons, out);
        chunk_begin = kNone;
      }
    } else if (chunk_begin == kNone) {
      chunk_begin = pos;
    }
    pos += static_cast<std::size_t>(d.size);
  }
  if (chunk_begin != kNone)
    classify_chunk(text, chunk_begin, text.size(), emoticons, out);
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize(text, default_emoticons());
}

}  // namespace tweetsent
