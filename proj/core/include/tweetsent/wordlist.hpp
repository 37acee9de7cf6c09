#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tweetsent/textutil.hpp"

namespace tweetsent {

struct WordListParseError : std::runtime_error {
  WordListParseError(int line, const std::string& what);
  int line;
};

// Stop-word set or abbreviation table, immutable after load.
class WordList {
 public:
  enum class Kind { stopwords, abbreviations };

  static WordList stopwords(StringSet words);
  static WordList abbreviations(StringMap<std::string> expansions);

  Kind kind() const { return kind_; }
  std::size_t size() const;

  // Stop-word membership; token is expected lowercase.
  bool contains(std::string_view token) const;

  // Abbreviation expansion keyed case-insensitively (keys stored lowercase);
  // null when the token is not an abbreviation.
  const std::string* expansion_of(std::string_view lower_token) const;

 private:
  explicit WordList(Kind kind) : kind_(kind) {}
  Kind kind_;
  StringSet words_;
  StringMap<std::string> expansions_;
};

// One lowercase word per line; '#' comments and blank lines ignored.
WordList load_stopwords(const std::filesystem::path& path);

// `ABBR<TAB>expansion` per line; keys unique case-insensitively.
WordList load_abbreviations(const std::filesystem::path& path);

// One emoticon per line. Emoticons are matched verbatim against whole
// whitespace-separated chunks during tokenization.
using EmoticonSet = StringSet;
EmoticonSet load_emoticons(const std::filesystem::path& path);

// Built-in table, kept in sync with the bundled emoticons file.
const EmoticonSet& default_emoticons();

}  // namespace tweetsent
