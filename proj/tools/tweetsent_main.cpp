// tweetsent: fetch tweets, score them against a sentiment dictionary, and
// render percentage reports (text block, table, csv, json, or svg chart).
//
// Exit codes: 0 success, 2 authentication/credentials, 3 transport or
// unreachable source, 4 dictionary/word-list errors, 5 nothing to analyze,
// 64 usage.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tweetsent/classify.hpp"
#include "tweetsent/client.hpp"
#include "tweetsent/corpus.hpp"
#include "tweetsent/lexicon.hpp"
#include "tweetsent/lexicon_cache.hpp"
#include "tweetsent/report.hpp"
#include "tweetsent/svg_chart.hpp"

namespace {

using namespace tweetsent;

constexpr int kExitAuth = 2;
constexpr int kExitTransport = 3;
constexpr int kExitLexicon = 4;
constexpr int kExitEmpty = 5;
constexpr int kExitUsage = 64;

struct Options {
  std::vector<std::string> queries;
  int count = 300;
  std::vector<std::string> offline;
  bool live = false;
  std::string lexicon = "data/lexicon.tsv";
  std::string stopwords = "data/stopwords.txt";
  std::string abbrev = "data/abbreviations.tsv";
  std::string emoticons;  // empty: built-in table
  std::string format = "text";
  std::string out;
  std::string cache_dir = ".tweetsent-cache";
  std::string source;
  std::size_t exemplars = kDefaultExemplarLimit;
  std::string endpoint = "https://api.twitter.com";
  bool show_neutral = false;
};

// Reproducible-build convention: SOURCE_DATE_EPOCH pins the timestamp.
std::string generation_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    long long seconds = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') now = static_cast<std::time_t>(seconds);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_output(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << bytes;
  out.flush();
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
}

EmoticonSet emoticon_table(const Options& opt) {
  return opt.emoticons.empty() ? default_emoticons()
                               : load_emoticons(opt.emoticons);
}

int cmd_fetch(const Options& opt) {
  Credentials creds = Credentials::from_env();
  Session session = Session::connect(creds, opt.endpoint);
  Query query{opt.queries.empty() ? "politics" : opt.queries.front(),
              opt.count};
  std::vector<RawTweet> tweets = session.fetch_tweets(query);
  write_corpus(tweets, opt.out);
  std::printf("fetched %zu tweets for \"%s\" -> %s\n", tweets.size(),
              query.text.c_str(), opt.out.c_str());
  return 0;
}

int cmd_analyze(const Options& opt) {
  Lexicon lexicon = load_lexicon(opt.lexicon);
  WordList stopwords = load_stopwords(opt.stopwords);
  WordList abbreviations = load_abbreviations(opt.abbrev);
  EmoticonSet emoticons = emoticon_table(opt);

  std::vector<std::string> queries = opt.queries;
  std::vector<std::vector<RawTweet>> batches;

  if (opt.live) {
    if (queries.empty()) queries.push_back("politics");
    Credentials creds = Credentials::from_env();
    for (const std::string& query_text : queries) {
      Session session = Session::connect(creds, opt.endpoint);
      batches.push_back(session.fetch_tweets({query_text, opt.count}));
    }
  } else {
    if (queries.empty())
      for (const std::string& path : opt.offline)
        queries.push_back(std::filesystem::path(path).stem().string());
    for (const std::string& path : opt.offline)
      batches.push_back(read_corpus(path));
  }

  ReportSet set(generation_timestamp(), lexicon.version());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const std::vector<RawTweet>& tweets = batches[i];
    std::vector<TweetScore> scores;
    scores.reserve(tweets.size());
    for (BatchItem& item :
         classify_batch(tweets, lexicon, stopwords, abbreviations, emoticons)) {
      if (auto* err = std::get_if<BatchError>(&item)) {
        std::fprintf(stderr, "warning: tweet %s skipped: %s\n",
                     err->tweet_id.c_str(), err->defect.message().c_str());
        continue;
      }
      scores.push_back(std::move(std::get<TweetScore>(item)));
    }
    if (scores.empty()) {
      std::fprintf(stderr, "error: no tweets to analyze for \"%s\"\n",
                   queries[i].c_str());
      return kExitEmpty;
    }
    set.add(aggregate(queries[i], scores, tweets, opt.exemplars));
  }
  if (set.reports().empty()) {
    std::fprintf(stderr, "error: no tweets to analyze\n");
    return kExitEmpty;
  }

  std::string rendered;
  if (opt.format == "svg") {
    rendered = render_chart(set);
  } else if (opt.format == "csv") {
    rendered = render_table(set, TableFormat::csv);
  } else if (opt.format == "json") {
    rendered = render_table(set, TableFormat::json);
  } else if (set.reports().size() == 1) {
    rendered = render_text(set.reports().front(), opt.show_neutral);
  } else {
    rendered = render_table(set, TableFormat::text);
  }
  write_output(rendered, opt.out);
  return 0;
}

int cmd_lexicon_update(const Options& opt) {
  CacheResult result = fetch_and_cache(opt.source, opt.cache_dir);
  if (result.stale)
    std::fprintf(stderr,
                 "warning: dictionary source unreachable; using cached copy\n");
  Lexicon lexicon = load_lexicon(result.path);
  std::printf("cache: %s\nversion: %s\nentries: %zu (%zu positive, %zu negative)\n",
              result.path.string().c_str(), lexicon.version().c_str(),
              lexicon.size(), lexicon.positive_count(),
              lexicon.negative_count());
  return 0;
}

int dispatch(int which, const Options& opt) {
  try {
    switch (which) {
      case 0:
        return cmd_fetch(opt);
      case 1:
        return cmd_analyze(opt);
      default:
        return cmd_lexicon_update(opt);
    }
  } catch (const MissingCredentialError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitAuth;
  } catch (const AuthFailedError& e) {
    std::fprintf(stderr, "error: authentication failed: %s\n", e.what());
    return kExitAuth;
  } catch (const EndpointUnreachableError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitTransport;
  } catch (const RateLimitedError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitTransport;
  } catch (const MalformedResponseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitTransport;
  } catch (const TransportError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitTransport;
  } catch (const SourceUnreachableNoCache& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitTransport;
  } catch (const CacheWriteFailed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLexicon;
  } catch (const LexiconParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLexicon;
  } catch (const DuplicateTermError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLexicon;
  } catch (const ValenceOutOfRangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLexicon;
  } catch (const LexiconIoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLexicon;
  } catch (const WordListParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitLexicon;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Lexicon-count sentiment analysis over tweets"};
  app.require_subcommand(1);

  CLI::App* fetch = app.add_subcommand("fetch", "Fetch tweets into a corpus file");
  fetch->add_option("-q,--query", opt.queries, "Search query (default: politics)");
  fetch->add_option("--count", opt.count, "Tweets to request")
      ->check(CLI::Range(1, 10000));
  fetch->add_option("--out", opt.out, "Corpus file to write")->required();
  fetch->add_option("--endpoint", opt.endpoint, "Search API base URL");

  CLI::App* analyze = app.add_subcommand("analyze", "Score tweets and render a report");
  analyze->add_option("-q,--query", opt.queries, "Query name (repeatable)");
  analyze->add_option("--count", opt.count, "Tweets to request in live mode")
      ->check(CLI::Range(1, 10000));
  analyze->add_option("--offline", opt.offline,
                      "Corpus file to analyze (repeatable, pairs with --query)");
  analyze->add_flag("--live", opt.live, "Fetch from the search API");
  analyze->add_option("--lexicon", opt.lexicon, "Dictionary file");
  analyze->add_option("--stopwords", opt.stopwords, "Stop-word file");
  analyze->add_option("--abbrev", opt.abbrev, "Abbreviation file");
  analyze->add_option("--emoticons", opt.emoticons, "Emoticon table file");
  analyze->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json", "svg"}));
  analyze->add_option("--out", opt.out, "Output file (default: stdout)");
  analyze->add_option("--exemplars", opt.exemplars, "Sample tweets per label");
  analyze->add_option("--endpoint", opt.endpoint, "Search API base URL");
  analyze->add_flag("--show-neutral", opt.show_neutral,
                    "Include the neutral section in text output");

  CLI::App* update = app.add_subcommand("lexicon-update", "Refresh the dictionary cache");
  update->add_option("--source", opt.source, "Dictionary URL or file")->required();
  update->add_option("--cache-dir", opt.cache_dir, "Cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (analyze->parsed()) {
    if (opt.live == !opt.offline.empty()) {
      std::fprintf(stderr,
                   "error: analyze needs exactly one of --live or --offline\n");
      return kExitUsage;
    }
    if (!opt.offline.empty() && !opt.queries.empty() &&
        opt.queries.size() != opt.offline.size()) {
      std::fprintf(stderr,
                   "error: --query and --offline counts must match\n");
      return kExitUsage;
    }
  }
  if (fetch->parsed() && opt.queries.size() > 1) {
    std::fprintf(stderr, "error: fetch takes a single --query\n");
    return kExitUsage;
  }

  int which = fetch->parsed() ? 0 : analyze->parsed() ? 1 : 2;
  return dispatch(which, opt);
}
