#include "tweetsent/clean.hpp"

#include "tweetsent/textutil.hpp"

namespace tweetsent {

CleanTokens clean(const RawTweet& tweet, const WordList& stopwords,
                  const WordList& abbreviations,
                  const EmoticonSet& emoticons) {
  CleanTokens out;
  out.tweet_id = tweet.id;

  const std::string lowered = ascii_lower(tweet.text);
  std::vector<Token> tokens = tokenize(lowered, emoticons);

  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (Token& tok : tokens) {
    if (tok.kind == TokenKind::url || tok.kind == TokenKind::mention) continue;
    if (tok.kind == TokenKind::hashtag) {
      tok.kind = TokenKind::word;
      tok.surface.erase(0, 1);  // drop '#', keep the body word
    }
    if (tok.kind == TokenKind::word && tok.surface == "rt") continue;
    kept.push_back(std::move(tok));
  }

  std::vector<Token> expanded;
  expanded.reserve(kept.size());
  for (Token& tok : kept) {
    const std::string* expansion =
        tok.kind == TokenKind::word ? abbreviations.expansion_of(tok.surface)
                                    : nullptr;
    if (expansion == nullptr) {
      expanded.push_back(std::move(tok));
      continue;
    }
    for (Token& exp : tokenize(ascii_lower(*expansion), emoticons)) {
      exp.begin = tok.begin;
      exp.end = tok.end;
      expanded.push_back(std::move(exp));
    }
  }

  for (Token& tok : expanded) {
    if (tok.kind == TokenKind::word && stopwords.contains(tok.surface))
      continue;
    out.tokens.push_back(std::move(tok));
  }
  return out;
}

CleanTokens clean(const RawTweet& tweet, const WordList& stopwords,
                  const WordList& abbreviations) {
  return clean(tweet, stopwords, abbreviations, default_emoticons());
}

}  // namespace tweetsent
