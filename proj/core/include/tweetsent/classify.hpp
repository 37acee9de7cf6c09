#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tweetsent/clean.hpp"
#include "tweetsent/lexicon.hpp"
#include "tweetsent/tweet.hpp"

namespace tweetsent {

enum class SentimentLabel { positive, negative, neutral };

std::string_view to_string(SentimentLabel label);

struct TweetScore {
  std::string tweet_id;
  int positive_count = 0;
  int negative_count = 0;
  int scored_total = 0;  // positive_count + negative_count
  double polarity = 0;   // (pos - neg) / scored_total, 0 when nothing scored
  SentimentLabel label = SentimentLabel::neutral;
};

struct InputOutOfRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Sign rule: > 0 positive, < 0 negative, exactly 0 neutral.
// Throws InputOutOfRangeError outside [-1, 1].
SentimentLabel label_of(double polarity);

// Counts lexicon hits by valence sign; unknown tokens contribute nothing.
// Valence magnitude is deliberately ignored.
TweetScore score(const CleanTokens& tokens, const Lexicon& lexicon);

struct BatchError {
  std::string tweet_id;
  TweetDefect defect;
};
using BatchItem = std::variant<TweetScore, BatchError>;

// clean + score per tweet, input order preserved, output length equals
// input length. Invalid tweets become BatchError items; the batch never
// aborts.
std::vector<BatchItem> classify_batch(std::span<const RawTweet> tweets,
                                      const Lexicon& lexicon,
                                      const WordList& stopwords,
                                      const WordList& abbreviations,
                                      const EmoticonSet& emoticons);
std::vector<BatchItem> classify_batch(std::span<const RawTweet> tweets,
                                      const Lexicon& lexicon,
                                      const WordList& stopwords,
                                      const WordList& abbreviations);

}  // namespace tweetsent
