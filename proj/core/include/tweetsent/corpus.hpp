#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tweetsent/tweet.hpp"

namespace tweetsent {

struct CorpusParseError : std::runtime_error {
  CorpusParseError(int line, const std::string& what);
  int line;
};

struct DuplicateIdError : std::runtime_error {
  DuplicateIdError(std::string id, int line);
  std::string id;
  int line;
};

struct CorpusIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Corpus files hold one JSON tweet record per line (fields: id, text,
// created_at, author, is_retweet, lang). Blank lines are skipped.
// Structural validation only; content checks (length, emptiness) happen
// in classify_batch so a bad record surfaces as a per-tweet error there.
std::vector<RawTweet> read_corpus(const std::filesystem::path& path);

// write then read restores every field value (round-trip identity).
void write_corpus(std::span<const RawTweet> tweets,
                  const std::filesystem::path& path);

}  // namespace tweetsent
