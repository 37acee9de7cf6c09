#include "tweetsent/wordlist.hpp"

#include <fstream>
#include <vector>

namespace tweetsent {

namespace {

std::string_view trim_ascii(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Yields (line_number, trimmed_line) for content lines; comments and blanks
// are skipped.
std::vector<std::pair<int, std::string>> content_lines(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw WordListParseError(0, "cannot open word list: " + path.string());
  std::vector<std::pair<int, std::string>> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = trim_ascii(raw);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line_no, std::string(line));
  }
  return out;
}

bool has_ascii_space(std::string_view s) {
  return s.find(' ') != std::string_view::npos ||
         s.find('\t') != std::string_view::npos;
}

}  // namespace

WordListParseError::WordListParseError(int line_no, const std::string& what)
    : std::runtime_error("word list parse error at line " +
                         std::to_string(line_no) + ": " + what),
      line(line_no) {}

WordList WordList::stopwords(StringSet words) {
  WordList list(Kind::stopwords);
  list.words_ = std::move(words);
  return list;
}

WordList WordList::abbreviations(StringMap<std::string> expansions) {
  WordList list(Kind::abbreviations);
  list.expansions_ = std::move(expansions);
  return list;
}

std::size_t WordList::size() const {
  return kind_ == Kind::stopwords ? words_.size() : expansions_.size();
}

bool WordList::contains(std::string_view token) const {
  return words_.find(token) != words_.end();
}

const std::string* WordList::expansion_of(std::string_view lower_token) const {
  auto it = expansions_.find(lower_token);
  return it == expansions_.end() ? nullptr : &it->second;
}

WordList load_stopwords(const std::filesystem::path& path) {
  StringSet words;
  for (auto& [line_no, line] : content_lines(path)) {
    if (has_ascii_space(line))
      throw WordListParseError(line_no, "stop word contains whitespace");
    if (line != ascii_lower(line))
      throw WordListParseError(line_no, "stop word not lowercase");
    words.insert(std::move(line));
  }
  return WordList::stopwords(std::move(words));
}

WordList load_abbreviations(const std::filesystem::path& path) {
  StringMap<std::string> table;
  for (auto& [line_no, line] : content_lines(path)) {
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw WordListParseError(line_no, "expected ABBR<TAB>expansion");
    std::string key = ascii_lower(trim_ascii(std::string_view(line).substr(0, tab)));
    std::string expansion(trim_ascii(std::string_view(line).substr(tab + 1)));
    if (key.empty() || has_ascii_space(key))
      throw WordListParseError(line_no, "bad abbreviation key");
    if (expansion.empty())
      throw WordListParseError(line_no, "empty expansion");
    auto [it, inserted] = table.emplace(std::move(key), std::move(expansion));
    (void)it;
    if (!inserted)
      throw WordListParseError(line_no, "duplicate abbreviation key");
  }
  return WordList::abbreviations(std::move(table));
}

EmoticonSet load_emoticons(const std::filesystem::path& path) {
  EmoticonSet set;
  for (auto& [line_no, line] : content_lines(path)) {
    (void)line_no;
    set.insert(std::move(line));
  }
  return set;
}

const EmoticonSet& default_emoticons() {
  static const EmoticonSet table = {
      ":)",  ":(",  ":-)", ":-(", ":D",  ":d",  ":P",  ":p",
      ":O",  ":o",  ":/",  ":|",  ":*",  ";)",  ";-)", "=)",
      "=(",  ":')", ":'(", ":'-(", "<3", "</3", "8)",  "8-)",
      "x)",  "x(",  "^_^", "-_-", "o_O", "o_o", "T_T", "t_t",
  };
  return table;
}

}  // namespace tweetsent
