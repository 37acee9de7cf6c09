#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tweetsent {

struct LexiconEntry {
  std::string term;   // lowercase, nonempty, no whitespace
  double valence = 0; // in [-1, 1], never 0
};

struct LexiconParseError : std::runtime_error {
  LexiconParseError(int line, const std::string& what);
  int line;
};

struct DuplicateTermError : std::runtime_error {
  explicit DuplicateTermError(std::string term);
  std::string term;
};

struct ValenceOutOfRangeError : std::runtime_error {
  ValenceOutOfRangeError(std::string term, double valence);
  std::string term;
};

struct LexiconIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable sentiment dictionary. Safe to share across threads after load.
class Lexicon {
 public:
  // Validates entries (duplicates, valence domain) and takes ownership.
  static Lexicon from_entries(const std::vector<LexiconEntry>& entries,
                              std::string version);

  std::optional<double> lookup(std::string_view token) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t positive_count() const { return positive_count_; }
  std::size_t negative_count() const { return negative_count_; }
  const std::string& version() const { return version_; }

  // Sorted by term; iteration order is the serialization order.
  const std::map<std::string, double, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, double, std::less<>> entries_;
  std::string version_;
  std::size_t positive_count_ = 0;
  std::size_t negative_count_ = 0;
};

// Parses a dictionary file: one `term<TAB>valence` per line, UTF-8,
// '#' comment lines and blank lines ignored. A comment of the form
// `# version: <string>` sets the lexicon version; otherwise the version
// is a fingerprint of the file bytes.
Lexicon load_lexicon(const std::filesystem::path& path);

// Writes the same format back; load(save(x)) preserves entries exactly.
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

}  // namespace tweetsent
