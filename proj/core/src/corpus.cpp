#include "tweetsent/corpus.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "tweetsent/textutil.hpp"

namespace tweetsent {

using nlohmann::json;

namespace {

bool blank_line(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') return false;
  return true;
}

std::string id_from(const json& record, int line_no) {
  const auto it = record.find("id");
  if (it == record.end())
    throw CorpusParseError(line_no, "missing id field");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_unsigned())
    return std::to_string(it->get<std::uint64_t>());
  if (it->is_number_integer())
    return std::to_string(it->get<std::int64_t>());
  throw CorpusParseError(line_no, "id is neither string nor integer");
}

}  // namespace

CorpusParseError::CorpusParseError(int line_no, const std::string& what)
    : std::runtime_error("corpus parse error at line " +
                         std::to_string(line_no) + ": " + what),
      line(line_no) {}

DuplicateIdError::DuplicateIdError(std::string id_value, int line_no)
    : std::runtime_error("duplicate tweet id '" + id_value + "' at line " +
                         std::to_string(line_no)),
      id(std::move(id_value)),
      line(line_no) {}

std::vector<RawTweet> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusIoError("cannot open corpus file: " + path.string());

  std::vector<RawTweet> tweets;
  StringSet seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_line(line)) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw CorpusParseError(line_no, e.what());
    }
    if (!record.is_object())
      throw CorpusParseError(line_no, "record is not a JSON object");

    RawTweet tweet;
    tweet.id = id_from(record, line_no);
    if (tweet.id.empty()) throw CorpusParseError(line_no, "empty id");
    if (!seen.insert(tweet.id).second)
      throw DuplicateIdError(tweet.id, line_no);

    const auto text = record.find("text");
    if (text == record.end() || !text->is_string())
      throw CorpusParseError(line_no, "missing or non-string text field");
    tweet.text = text->get<std::string>();

    if (auto it = record.find("created_at");
        it != record.end() && it->is_string())
      tweet.created_at = it->get<std::string>();
    if (auto it = record.find("author"); it != record.end() && it->is_string())
      tweet.author = it->get<std::string>();
    if (auto it = record.find("is_retweet");
        it != record.end() && it->is_boolean())
      tweet.is_retweet = it->get<bool>();
    if (auto it = record.find("lang"); it != record.end() && it->is_string())
      tweet.lang = it->get<std::string>();

    tweets.push_back(std::move(tweet));
  }
  return tweets;
}

void write_corpus(std::span<const RawTweet> tweets,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CorpusIoError("cannot write corpus file: " + path.string());
  for (const RawTweet& tweet : tweets) {
    json record{
        {"author", tweet.author},   {"created_at", tweet.created_at},
        {"id", tweet.id},           {"is_retweet", tweet.is_retweet},
        {"text", tweet.text},
    };
    if (tweet.lang) record["lang"] = *tweet.lang;
    out << record.dump() << '\n';
  }
  out.flush();
  if (!out) throw CorpusIoError("write failed: " + path.string());
}

}  // namespace tweetsent
