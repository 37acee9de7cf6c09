#pragma once

#include <chrono>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tweetsent/oauth.hpp"
#include "tweetsent/tweet.hpp"

namespace tweetsent {

struct AuthFailedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EndpointUnreachableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RateLimitedError : std::runtime_error {
  RateLimitedError(const std::string& what, std::chrono::seconds retry_after);
  std::chrono::seconds retry_after;
};
struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedResponseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Query {
  std::string text;  // nonempty
  int count = 300;   // in [1, 10000]
};

struct RetryPolicy {
  int max_retries = 3;  // total retry budget per fetch
  std::chrono::milliseconds initial_backoff{1000};
  int backoff_multiplier = 2;
};

struct SessionConfig {
  RetryPolicy retry{};
  int page_size = 100;  // v1.1 search page cap
};

// Authenticated search-API session. One session serves one fetch at a
// time (pagination is sequential via max_id); use separate sessions for
// concurrent queries.
class Session {
 public:
  // Verifies the credentials with one lightweight call. Throws
  // AuthFailedError on rejection, EndpointUnreachableError when the
  // endpoint cannot be reached.
  static Session connect(Credentials creds, const std::string& endpoint,
                         SessionConfig config = {});

  Session(Session&&) noexcept;
  Session& operator=(Session&&) noexcept;
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;
  ~Session();

  // Paginated search: up to query.count tweets, deduplicated by id, in
  // server order. Fewer than count is success. HTTP 429 is retried with
  // exponential backoff; RateLimitedError surfaces only after the retry
  // budget is spent.
  std::vector<RawTweet> fetch_tweets(const Query& query);

  void close();
  bool is_open() const;

 private:
  Session();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tweetsent
