#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace tweetsent {

// One tweet as fetched or read from a corpus file. Text is UTF-8.
struct RawTweet {
  std::string id;
  std::string text;
  std::string created_at;
  std::string author;
  bool is_retweet = false;
  std::optional<std::string> lang;
};

// Post-2017 character limit; counted in Unicode codepoints.
inline constexpr std::size_t kMaxTweetChars = 280;

struct TweetDefect {
  enum class Kind { empty_text, over_length };
  Kind kind;
  std::size_t length = 0;  // codepoint count, set for over_length
  std::string message() const;
};

// Returns the defect for an invalid tweet, or nullopt when it passes.
std::optional<TweetDefect> validate_tweet(const RawTweet& tweet);

}  // namespace tweetsent
