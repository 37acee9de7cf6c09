#include "tweetsent/client.hpp"

#include <charconv>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "tweetsent/textutil.hpp"

namespace tweetsent {

using nlohmann::json;

RateLimitedError::RateLimitedError(const std::string& what,
                                   std::chrono::seconds retry_after_arg)
    : std::runtime_error(what), retry_after(retry_after_arg) {}

namespace {

constexpr const char* kSearchPath = "/1.1/search/tweets.json";
constexpr const char* kVerifyPath = "/1.1/account/verify_credentials.json";

std::chrono::seconds retry_after_of(const httplib::Result& res) {
  if (res && res->has_header("Retry-After")) {
    long long seconds = 0;
    const std::string value = res->get_header_value("Retry-After");
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), seconds);
    if (ec == std::errc{} && ptr == value.data() + value.size() && seconds >= 0)
      return std::chrono::seconds(seconds);
  }
  return std::chrono::seconds(0);
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

RawTweet tweet_from_status(const json& status) {
  RawTweet tweet;
  if (auto it = status.find("id_str"); it != status.end() && it->is_string())
    tweet.id = it->get<std::string>();
  else if (auto id = status.find("id");
           id != status.end() && id->is_number_unsigned())
    tweet.id = std::to_string(id->get<std::uint64_t>());
  if (tweet.id.empty())
    throw MalformedResponseError("status without usable id");

  if (auto it = status.find("text"); it != status.end() && it->is_string())
    tweet.text = it->get<std::string>();
  else if (auto ft = status.find("full_text");
           ft != status.end() && ft->is_string())
    tweet.text = ft->get<std::string>();
  else
    throw MalformedResponseError("status without text");

  if (auto it = status.find("created_at");
      it != status.end() && it->is_string())
    tweet.created_at = it->get<std::string>();
  if (auto user = status.find("user");
      user != status.end() && user->is_object()) {
    if (auto it = user->find("screen_name");
        it != user->end() && it->is_string())
      tweet.author = it->get<std::string>();
  }
  tweet.is_retweet = status.contains("retweeted_status") ||
                     tweet.text.rfind("RT @", 0) == 0;
  if (auto it = status.find("lang"); it != status.end() && it->is_string())
    tweet.lang = it->get<std::string>();
  return tweet;
}

}  // namespace

struct Session::Impl {
  Credentials creds;
  std::string endpoint;       // as given, for the HTTP client
  std::string signature_url;  // normalized base, path appended per request
  SessionConfig config;
  std::unique_ptr<httplib::Client> http;
  bool open = false;

  httplib::Result get_signed(const std::string& path,
                             const oauth::Params& params) {
    httplib::Params query;
    for (const auto& [key, value] : params) query.emplace(key, value);

    std::string url = signature_url + path;
    std::string header = oauth::authorization_header(
        creds, "GET", url, params, oauth::make_nonce(),
        std::to_string(std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count()));
    httplib::Headers headers{{"Authorization", header}};
    std::string target(path);
    if (!query.empty())
      target += "?" + httplib::detail::params_to_query_str(query);
    return http->Get(target, headers);
  }
};

Session::Session() : impl_(std::make_unique<Impl>()) {}
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;
Session::~Session() = default;

Session Session::connect(Credentials creds, const std::string& endpoint,
                         SessionConfig config) {
  if (!creds.complete())
    throw AuthFailedError("incomplete credentials");
  if (config.page_size < 1 || config.retry.max_retries < 0 ||
      config.retry.backoff_multiplier < 1)
    throw std::invalid_argument("bad session configuration");

  Session session;
  session.impl_->creds = std::move(creds);
  session.impl_->endpoint = endpoint;
  session.impl_->signature_url = oauth::normalize_base_url(endpoint);
  session.impl_->config = config;
  session.impl_->http = std::make_unique<httplib::Client>(endpoint);
  session.impl_->http->set_connection_timeout(10);
  session.impl_->http->set_read_timeout(30);

  auto res = session.impl_->get_signed(kVerifyPath, {});
  if (!res)
    throw EndpointUnreachableError("endpoint unreachable: " +
                                   httplib::to_string(res.error()));
  if (res->status == 401 || res->status == 403)
    throw AuthFailedError("credential verification rejected (HTTP " +
                          std::to_string(res->status) + ")");
  if (res->status != 200)
    throw TransportError("credential verification failed (HTTP " +
                         std::to_string(res->status) + ")");
  session.impl_->open = true;
  return session;
}

bool Session::is_open() const { return impl_ && impl_->open; }

void Session::close() {
  if (impl_) impl_->open = false;
}

std::vector<RawTweet> Session::fetch_tweets(const Query& query) {
  if (!is_open()) throw std::logic_error("fetch_tweets on a closed session");
  if (query.text.empty()) throw std::invalid_argument("empty query text");
  if (query.count < 1 || query.count > 10000)
    throw std::invalid_argument("query count outside [1, 10000]");

  const RetryPolicy& retry = impl_->config.retry;
  std::vector<RawTweet> tweets;
  StringSet seen;
  std::uint64_t max_id = 0;
  bool have_max_id = false;
  int retries_used = 0;
  auto backoff = retry.initial_backoff;

  while (static_cast<int>(tweets.size()) < query.count) {
    const int ask = std::min(impl_->config.page_size,
                             query.count - static_cast<int>(tweets.size()));
    oauth::Params params{{"q", query.text}, {"count", std::to_string(ask)}};
    if (have_max_id)
      params.emplace_back("max_id", std::to_string(max_id));

    auto res = impl_->get_signed(kSearchPath, params);
    if (!res)
      throw TransportError("request failed: " +
                           httplib::to_string(res.error()));
    if (res->status == 429) {
      if (retries_used >= retry.max_retries)
        throw RateLimitedError("rate limited, retry budget exhausted",
                               retry_after_of(res));
      ++retries_used;
      std::this_thread::sleep_for(backoff);
      backoff *= retry.backoff_multiplier;
      continue;
    }
    if (res->status == 401 || res->status == 403)
      throw AuthFailedError("request rejected (HTTP " +
                            std::to_string(res->status) + ")");
    if (res->status != 200)
      throw TransportError("unexpected HTTP status " +
                           std::to_string(res->status));

    json body;
    try {
      body = json::parse(res->body);
    } catch (const json::parse_error& e) {
      throw MalformedResponseError(std::string("bad response JSON: ") +
                                   e.what());
    }
    if (!body.is_object() || !body.contains("statuses") ||
        !body["statuses"].is_array())
      throw MalformedResponseError("response missing statuses array");

    const json& statuses = body["statuses"];
    std::size_t new_count = 0;
    std::uint64_t page_min_id = 0;
    bool have_page_min = false;
    for (const json& status : statuses) {
      if (!status.is_object())
        throw MalformedResponseError("non-object status entry");
      RawTweet tweet = tweet_from_status(status);
      std::uint64_t numeric_id = 0;
      if (parse_u64(tweet.id, numeric_id) &&
          (!have_page_min || numeric_id < page_min_id)) {
        page_min_id = numeric_id;
        have_page_min = true;
      }
      if (static_cast<int>(tweets.size()) < query.count &&
          seen.insert(tweet.id).second) {
        tweets.push_back(std::move(tweet));
        ++new_count;
      }
    }

    // Stop when the server is exhausted (short page), the page brought
    // nothing new, or pagination cannot advance.
    if (static_cast<int>(statuses.size()) < ask) break;
    if (new_count == 0) break;
    if (!have_page_min || page_min_id == 0) break;
    max_id = page_min_id - 1;
    have_max_id = true;
  }
  return tweets;
}

}  // namespace tweetsent
