#pragma once

#include <string>
#include <vector>

#include "tweetsent/tokenizer.hpp"
#include "tweetsent/tweet.hpp"
#include "tweetsent/wordlist.hpp"

namespace tweetsent {

// Scoring-ready tokens: only word and emoticon kinds survive cleaning,
// word surfaces are lowercase, and no surface is a stop word.
struct CleanTokens {
  std::string tweet_id;
  std::vector<Token> tokens;
};

// Cleaning pipeline, fixed order:
//   1. ASCII-lowercase the text and tokenize it.
//   2. Drop urls and mentions; unwrap hashtags to their body word; drop
//      "rt" retweet markers.
//   3. Expand abbreviations (single pass over whole word tokens; expansion
//      tokens inherit the source span).
//   4. Drop stop words.
// Idempotent at the token level: cleaning the space-joined output surfaces
// again yields the same surfaces.
CleanTokens clean(const RawTweet& tweet, const WordList& stopwords,
                  const WordList& abbreviations, const EmoticonSet& emoticons);
CleanTokens clean(const RawTweet& tweet, const WordList& stopwords,
                  const WordList& abbreviations);

}  // namespace tweetsent
