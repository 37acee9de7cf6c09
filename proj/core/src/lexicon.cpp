#include "tweetsent/lexicon.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tweetsent/textutil.hpp"

namespace tweetsent {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconIoError("cannot open lexicon file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

std::string_view trim_ascii(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool has_whitespace(std::string_view term) {
  for (std::size_t pos = 0; pos < term.size();) {
    auto d = decode_utf8(term, pos);
    if (d.valid && is_unicode_space(d.cp)) return true;
    pos += static_cast<std::size_t>(d.size);
  }
  return false;
}

double parse_valence(std::string_view text, int line) {
  double v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw LexiconParseError(line, "malformed valence");
  return v;
}

}  // namespace

LexiconParseError::LexiconParseError(int line_no, const std::string& what)
    : std::runtime_error("lexicon parse error at line " +
                         std::to_string(line_no) + ": " + what),
      line(line_no) {}

DuplicateTermError::DuplicateTermError(std::string t)
    : std::runtime_error("duplicate lexicon term: " + t), term(std::move(t)) {}

ValenceOutOfRangeError::ValenceOutOfRangeError(std::string t, double valence)
    : std::runtime_error("valence out of range for term '" + t +
                         "': " + std::to_string(valence)),
      term(std::move(t)) {}

Lexicon Lexicon::from_entries(const std::vector<LexiconEntry>& entries,
                              std::string version) {
  Lexicon lex;
  lex.version_ = std::move(version);
  for (const auto& e : entries) {
    if (e.term.empty() || has_whitespace(e.term) || e.term != ascii_lower(e.term))
      throw LexiconParseError(0, "term not a normalized token: '" + e.term + "'");
    if (!std::isfinite(e.valence) || e.valence == 0.0 ||
        e.valence < -1.0 || e.valence > 1.0)
      throw ValenceOutOfRangeError(e.term, e.valence);
    auto [it, inserted] = lex.entries_.emplace(e.term, e.valence);
    (void)it;
    if (!inserted) throw DuplicateTermError(e.term);
    if (e.valence > 0)
      ++lex.positive_count_;
    else
      ++lex.negative_count_;
  }
  return lex;
}

std::optional<double> Lexicon::lookup(std::string_view token) const {
  auto it = entries_.find(token);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::string version;
  std::vector<LexiconEntry> entries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (nl == std::string::npos ? content.size() : nl) - pos);
    pos = (nl == std::string::npos) ? content.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view trimmed = trim_ascii(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      std::string_view body = trim_ascii(trimmed.substr(1));
      constexpr std::string_view kVersionKey = "version:";
      if (version.empty() && body.substr(0, kVersionKey.size()) == kVersionKey)
        version = std::string(trim_ascii(body.substr(kVersionKey.size())));
      continue;
    }
    std::size_t tab = trimmed.find('\t');
    if (tab == std::string_view::npos)
      throw LexiconParseError(line_no, "expected term<TAB>valence");
    std::string term(trim_ascii(trimmed.substr(0, tab)));
    std::string_view valence_text = trim_ascii(trimmed.substr(tab + 1));
    if (term.empty()) throw LexiconParseError(line_no, "empty term");
    if (has_whitespace(term) || term != ascii_lower(term))
      throw LexiconParseError(line_no, "term not a normalized token: '" + term + "'");
    double v = parse_valence(valence_text, line_no);
    entries.push_back({std::move(term), v});
  }

  if (version.empty()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(content)));
    version = buf;
  }
  return Lexicon::from_entries(entries, std::move(version));
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LexiconIoError("cannot write lexicon file: " + path.string());
  out << "# version: " << lexicon.version() << "\n";
  for (const auto& [term, valence] : lexicon.entries()) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, valence);
    if (ec != std::errc{}) throw LexiconIoError("valence formatting failed");
    out << term << '\t' << std::string_view(buf, ptr - buf) << '\n';
  }
  out.flush();
  if (!out) throw LexiconIoError("write failed: " + path.string());
}

}  // namespace tweetsent
