#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tweetsent/classify.hpp"
#include "tweetsent/tweet.hpp"

namespace tweetsent {

struct TotalZeroError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyBatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DuplicateQueryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Percentage with exactly two fractional digits, stored in integer
// hundredths so rendering never goes through floating point.
class Pct2 {
 public:
  Pct2() = default;
  static Pct2 from_hundredths(std::int64_t hundredths);
  std::int64_t hundredths() const { return hundredths_; }
  std::string str() const;  // "16.39"
  friend bool operator==(const Pct2&, const Pct2&) = default;

 private:
  std::int64_t hundredths_ = 0;
};

// floor(10000 * n / total) / 100 in exact integer arithmetic: truncation
// toward zero, never round-half-up. Throws TotalZeroError when total = 0.
Pct2 percent_trunc(std::int64_t n, std::int64_t total);

struct QueryReport {
  std::string query;
  std::int64_t analyzed = 0;
  std::int64_t positive_n = 0;
  std::int64_t negative_n = 0;
  std::int64_t neutral_n = 0;
  Pct2 positive_pct;
  Pct2 negative_pct;
  Pct2 neutral_pct;
  std::vector<std::string> positive_exemplars;
  std::vector<std::string> negative_exemplars;
  std::vector<std::string> neutral_exemplars;

  // Rendering-only report from externally supplied percentages (historical
  // data); counts stay zero and only query + percentages are meaningful.
  static QueryReport display_only(std::string query, Pct2 positive,
                                  Pct2 negative, Pct2 neutral);
};

class ReportSet {
 public:
  ReportSet() = default;
  ReportSet(std::string generated_at, std::string lexicon_version);

  // Throws DuplicateQueryError when the query name is already present.
  void add(QueryReport report);

  std::span<const QueryReport> reports() const { return reports_; }
  const std::string& generated_at() const { return generated_at_; }
  const std::string& lexicon_version() const { return lexicon_version_; }

 private:
  std::vector<QueryReport> reports_;
  std::string generated_at_;
  std::string lexicon_version_;
};

inline constexpr std::size_t kDefaultExemplarLimit = 10;

// Counts labels and computes truncated percentages. Exemplars are the
// first `exemplar_limit` tweet texts per label class in score order,
// looked up by id in `tweets`. Throws EmptyBatchError on empty scores.
QueryReport aggregate(std::string query, std::span<const TweetScore> scores,
                      std::span<const RawTweet> tweets = {},
                      std::size_t exemplar_limit = kDefaultExemplarLimit);

// Sample-output text block: three percentage lines, then "Positive
// tweets:" and "Negative tweets:" exemplar sections (neutral opt-in).
// Byte-deterministic.
std::string render_text(const QueryReport& report, bool show_neutral = false);

enum class TableFormat { text, csv, json };

// One row per query, columns Query / Positive / Negative / Neutral.
// All three formats carry identical numeric values; byte-deterministic.
std::string render_table(const ReportSet& set, TableFormat format);

}  // namespace tweetsent
