#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "tweetsent/oauth.hpp"

namespace testsupport {

struct RecordedRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> params;
  std::string authorization;
};

// Replay server for the search-API wire format. A transcript file pairs
// expected requests with canned responses:
//
//   { "credentials": { "consumer_key": ..., "consumer_secret": ...,
//                      "access_token": ..., "access_token_secret": ... },
//     "steps": [ { "expect": { "method": "GET", "path": "/...",
//                              "params": { "q": "...", "count": "3" } },
//                  "response": { "status": 200, "body": { ... },
//                                "headers": { "Retry-After": "1" } } } ] }
//
// Steps are matched strictly in order with exact query-parameter sets.
// Every request's OAuth 1.0a signature is recomputed from the transcript
// credentials; a mismatch yields 401 without consuming a step. Mismatched
// method/path/params yield 500.
class MockTwitterServer {
 public:
  explicit MockTwitterServer(const std::filesystem::path& transcript);
  ~MockTwitterServer();
  MockTwitterServer(const MockTwitterServer&) = delete;
  MockTwitterServer& operator=(const MockTwitterServer&) = delete;

  std::string base_url() const;
  int port() const { return port_; }
  const tweetsent::Credentials& credentials() const { return creds_; }

  std::vector<RecordedRequest> requests() const;
  std::size_t search_request_count() const;
  std::size_t steps_remaining() const;

 private:
  struct Step {
    std::string method;
    std::string path;
    std::map<std::string, std::string> params;
    int status = 200;
    std::string body;
    std::vector<std::pair<std::string, std::string>> headers;
  };

  void handle(const httplib::Request& req, httplib::Response& res);
  bool oauth_valid(const httplib::Request& req) const;

  tweetsent::Credentials creds_;
  std::vector<Step> steps_;
  mutable std::mutex mu_;
  std::size_t next_step_ = 0;
  std::vector<RecordedRequest> log_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace testsupport
