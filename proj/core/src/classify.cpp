#include "tweetsent/classify.hpp"

namespace tweetsent {

std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::positive:
      return "positive";
    case SentimentLabel::negative:
      return "negative";
    case SentimentLabel::neutral:
      return "neutral";
  }
  return "neutral";
}

SentimentLabel label_of(double polarity) {
  if (!(polarity >= -1.0 && polarity <= 1.0))
    throw InputOutOfRangeError("polarity outside [-1, 1]: " +
                               std::to_string(polarity));
  if (polarity > 0) return SentimentLabel::positive;
  if (polarity < 0) return SentimentLabel::negative;
  return SentimentLabel::neutral;
}

TweetScore score(const CleanTokens& tokens, const Lexicon& lexicon) {
  TweetScore s;
  s.tweet_id = tokens.tweet_id;
  for (const Token& tok : tokens.tokens) {
    auto valence = lexicon.lookup(tok.surface);
    if (!valence) continue;
    if (*valence > 0)
      ++s.positive_count;
    else
      ++s.negative_count;
  }
  s.scored_total = s.positive_count + s.negative_count;
  s.polarity = s.scored_total == 0
                   ? 0.0
                   : static_cast<double>(s.positive_count - s.negative_count) /
                         static_cast<double>(s.scored_total);
  s.label = label_of(s.polarity);
  return s;
}

std::vector<BatchItem> classify_batch(std::span<const RawTweet> tweets,
                                      const Lexicon& lexicon,
                                      const WordList& stopwords,
                                      const WordList& abbreviations,
                                      const EmoticonSet& emoticons) {
  std::vector<BatchItem> out;
  out.reserve(tweets.size());
  for (const RawTweet& tweet : tweets) {
    if (auto defect = validate_tweet(tweet)) {
      out.push_back(BatchError{tweet.id, *defect});
      continue;
    }
    out.push_back(
        score(clean(tweet, stopwords, abbreviations, emoticons), lexicon));
  }
  return out;
}

std::vector<BatchItem> classify_batch(std::span<const RawTweet> tweets,
                                      const Lexicon& lexicon,
                                      const WordList& stopwords,
                                      const WordList& abbreviations) {
  return classify_batch(tweets, lexicon, stopwords, abbreviations,
                        default_emoticons());
}

}  // namespace tweetsent
