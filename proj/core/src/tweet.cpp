#include "tweetsent/tweet.hpp"

#include "tweetsent/textutil.hpp"

namespace tweetsent {

std::string TweetDefect::message() const {
  switch (kind) {
    case Kind::empty_text:
      return "empty text";
    case Kind::over_length:
      return "text exceeds 280 characters (" + std::to_string(length) + ")";
  }
  return "unknown defect";
}

std::optional<TweetDefect> validate_tweet(const RawTweet& tweet) {
  if (tweet.text.empty())
    return TweetDefect{TweetDefect::Kind::empty_text, 0};
  std::size_t chars = count_codepoints(tweet.text);
  if (chars > kMaxTweetChars)
    return TweetDefect{TweetDefect::Kind::over_length, chars};
  return std::nullopt;
}

}  // namespace tweetsent
