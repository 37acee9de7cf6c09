#include "tweetsent/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "tweetsent/textutil.hpp"

namespace tweetsent {

using nlohmann::json;

Pct2 Pct2::from_hundredths(std::int64_t hundredths) {
  if (hundredths < 0)
    throw std::invalid_argument("negative percentage");
  Pct2 p;
  p.hundredths_ = hundredths;
  return p;
}

std::string Pct2::str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld",
                static_cast<long long>(hundredths_ / 100),
                static_cast<long long>(hundredths_ % 100));
  return buf;
}

Pct2 percent_trunc(std::int64_t n, std::int64_t total) {
  if (total == 0) throw TotalZeroError("percentage of a zero total");
  if (n < 0 || total < 0 || n > total)
    throw std::invalid_argument("percentage numerator outside [0, total]");
  return Pct2::from_hundredths(10000 * n / total);
}

QueryReport QueryReport::display_only(std::string query, Pct2 positive,
                                      Pct2 negative, Pct2 neutral) {
  QueryReport r;
  r.query = std::move(query);
  r.positive_pct = positive;
  r.negative_pct = negative;
  r.neutral_pct = neutral;
  return r;
}

ReportSet::ReportSet(std::string generated_at, std::string lexicon_version)
    : generated_at_(std::move(generated_at)),
      lexicon_version_(std::move(lexicon_version)) {}

void ReportSet::add(QueryReport report) {
  for (const QueryReport& existing : reports_)
    if (existing.query == report.query)
      throw DuplicateQueryError("duplicate query in report set: " +
                                report.query);
  reports_.push_back(std::move(report));
}

namespace {

// Exemplar lines stay one line each; embedded newlines become spaces.
std::string flatten(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c == '\n' || c == '\r') c = ' ';
  return out;
}

void append_exemplars(std::string& out, std::string_view header,
                      const std::vector<std::string>& exemplars) {
  out += '\n';
  out += header;
  out += ":\n\n";
  for (const std::string& text : exemplars) {
    out += "tweet: ";
    out += flatten(text);
    out += '\n';
  }
}

std::string csv_field(std::string_view value) {
  bool needs_quotes = value.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json report_json(const QueryReport& r) {
  return json{
      {"query", r.query},
      {"analyzed", r.analyzed},
      {"positive_n", r.positive_n},
      {"negative_n", r.negative_n},
      {"neutral_n", r.neutral_n},
      {"positive_pct", r.positive_pct.str()},
      {"negative_pct", r.negative_pct.str()},
      {"neutral_pct", r.neutral_pct.str()},
      {"exemplars",
       json{{"positive", r.positive_exemplars},
            {"negative", r.negative_exemplars},
            {"neutral", r.neutral_exemplars}}},
  };
}

}  // namespace

QueryReport aggregate(std::string query, std::span<const TweetScore> scores,
                      std::span<const RawTweet> tweets,
                      std::size_t exemplar_limit) {
  if (scores.empty()) throw EmptyBatchError("no scores to aggregate");

  StringMap<const std::string*> text_by_id;
  for (const RawTweet& tweet : tweets) text_by_id.emplace(tweet.id, &tweet.text);

  QueryReport r;
  r.query = std::move(query);
  r.analyzed = static_cast<std::int64_t>(scores.size());
  for (const TweetScore& s : scores) {
    std::int64_t* count = nullptr;
    std::vector<std::string>* exemplars = nullptr;
    switch (s.label) {
      case SentimentLabel::positive:
        count = &r.positive_n;
        exemplars = &r.positive_exemplars;
        break;
      case SentimentLabel::negative:
        count = &r.negative_n;
        exemplars = &r.negative_exemplars;
        break;
      case SentimentLabel::neutral:
        count = &r.neutral_n;
        exemplars = &r.neutral_exemplars;
        break;
    }
    ++*count;
    if (exemplars->size() < exemplar_limit) {
      auto it = text_by_id.find(s.tweet_id);
      if (it != text_by_id.end()) exemplars->push_back(*it->second);
    }
  }
  r.positive_pct = percent_trunc(r.positive_n, r.analyzed);
  r.negative_pct = percent_trunc(r.negative_n, r.analyzed);
  r.neutral_pct = percent_trunc(r.neutral_n, r.analyzed);
  return r;
}

std::string render_text(const QueryReport& report, bool show_neutral) {
  std::string out;
  out += "Positive tweets percentage: " + report.positive_pct.str() + " %\n";
  out += "Negative tweets percentage: " + report.negative_pct.str() + " %\n";
  out += "Neutral tweets percentage: " + report.neutral_pct.str() + " %\n";
  append_exemplars(out, "Positive tweets", report.positive_exemplars);
  append_exemplars(out, "Negative tweets", report.negative_exemplars);
  if (show_neutral)
    append_exemplars(out, "Neutral tweets", report.neutral_exemplars);
  return out;
}

std::string render_table(const ReportSet& set, TableFormat format) {
  switch (format) {
    case TableFormat::text: {
      std::string out = "Query, Positive, Negative, Neutral\n";
      for (const QueryReport& r : set.reports()) {
        out += r.query + ", " + r.positive_pct.str() + ", " +
               r.negative_pct.str() + ", " + r.neutral_pct.str() + "\n";
      }
      return out;
    }
    case TableFormat::csv: {
      std::string out = "query,positive,negative,neutral\n";
      for (const QueryReport& r : set.reports()) {
        out += csv_field(r.query) + "," + r.positive_pct.str() + "," +
               r.negative_pct.str() + "," + r.neutral_pct.str() + "\n";
      }
      return out;
    }
    case TableFormat::json: {
      json doc{
          {"generated_at", set.generated_at()},
          {"lexicon_version", set.lexicon_version()},
          {"reports", json::array()},
      };
      for (const QueryReport& r : set.reports())
        doc["reports"].push_back(report_json(r));
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace tweetsent
