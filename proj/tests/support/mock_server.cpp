#include "support/mock_server.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace testsupport {

using nlohmann::json;
using tweetsent::Credentials;

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string percent_decode(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      int hi = hex_value(s[i + 1]);
      int lo = hex_value(s[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out += static_cast<char>(hi * 16 + lo);
        i += 2;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

// Parses `OAuth k="v", k="v"` into decoded key/value pairs.
std::map<std::string, std::string> parse_oauth_header(std::string_view header) {
  std::map<std::string, std::string> out;
  constexpr std::string_view kPrefix = "OAuth ";
  if (header.substr(0, kPrefix.size()) != kPrefix) return out;
  std::string_view rest = header.substr(kPrefix.size());
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t eq = rest.find('=', pos);
    if (eq == std::string_view::npos) break;
    std::string key = percent_decode(rest.substr(pos, eq - pos));
    std::size_t open = eq + 1;
    if (open >= rest.size() || rest[open] != '"') break;
    std::size_t close = rest.find('"', open + 1);
    if (close == std::string_view::npos) break;
    out[key] = percent_decode(rest.substr(open + 1, close - open - 1));
    pos = close + 1;
    while (pos < rest.size() && (rest[pos] == ',' || rest[pos] == ' ')) ++pos;
  }
  return out;
}

}  // namespace

MockTwitterServer::MockTwitterServer(const std::filesystem::path& transcript) {
  std::ifstream in(transcript);
  if (!in)
    throw std::runtime_error("cannot open transcript: " + transcript.string());
  json doc = json::parse(in);

  const json& creds = doc.at("credentials");
  creds_.consumer_key = creds.at("consumer_key").get<std::string>();
  creds_.consumer_secret = creds.at("consumer_secret").get<std::string>();
  creds_.access_token = creds.at("access_token").get<std::string>();
  creds_.access_token_secret =
      creds.at("access_token_secret").get<std::string>();

  for (const json& step_doc : doc.at("steps")) {
    Step step;
    const json& expect = step_doc.at("expect");
    step.method = expect.value("method", "GET");
    step.path = expect.at("path").get<std::string>();
    if (expect.contains("params"))
      for (const auto& [key, value] : expect["params"].items())
        step.params[key] = value.get<std::string>();
    const json& response = step_doc.at("response");
    step.status = response.value("status", 200);
    if (response.contains("body")) step.body = response["body"].dump();
    if (response.contains("headers"))
      for (const auto& [key, value] : response["headers"].items())
        step.headers.emplace_back(key, value.get<std::string>());
    steps_.push_back(std::move(step));
  }

  server_.Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
    handle(req, res);
  });
  port_ = server_.bind_to_any_port("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("mock server bind failed");
  thread_ = std::thread([this] { server_.listen_after_bind(); });
  server_.wait_until_ready();
}

MockTwitterServer::~MockTwitterServer() {
  server_.stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockTwitterServer::base_url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

std::vector<RecordedRequest> MockTwitterServer::requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return log_;
}

std::size_t MockTwitterServer::search_request_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::size_t n = 0;
  for (const RecordedRequest& r : log_)
    if (r.path == "/1.1/search/tweets.json") ++n;
  return n;
}

std::size_t MockTwitterServer::steps_remaining() const {
  std::lock_guard<std::mutex> lock(mu_);
  return steps_.size() - next_step_;
}

bool MockTwitterServer::oauth_valid(const httplib::Request& req) const {
  auto fields = parse_oauth_header(req.get_header_value("Authorization"));
  auto field = [&](const char* key) {
    auto it = fields.find(key);
    return it == fields.end() ? std::string() : it->second;
  };
  if (field("oauth_consumer_key") != creds_.consumer_key) return false;
  if (field("oauth_token") != creds_.access_token) return false;
  if (field("oauth_signature_method") != "HMAC-SHA1") return false;
  const std::string received = field("oauth_signature");
  if (received.empty()) return false;

  tweetsent::oauth::Params params;
  for (const auto& [key, values] : req.params)
    params.emplace_back(key, values);
  for (const auto& [key, value] : fields)
    if (key != "oauth_signature" && key != "realm")
      params.emplace_back(key, value);

  const std::string url = base_url() + req.path;
  const std::string expected =
      tweetsent::oauth::sign(creds_, req.method, url, params);
  return expected == received;
}

void MockTwitterServer::handle(const httplib::Request& req,
                               httplib::Response& res) {
  std::lock_guard<std::mutex> lock(mu_);
  RecordedRequest record;
  record.method = req.method;
  record.path = req.path;
  for (const auto& [key, value] : req.params) record.params[key] = value;
  record.authorization = req.get_header_value("Authorization");
  log_.push_back(record);

  if (!oauth_valid(req)) {
    res.status = 401;
    res.set_content(R"({"errors":[{"code":32,"message":"auth"}]})",
                    "application/json");
    return;
  }
  if (next_step_ >= steps_.size()) {
    res.status = 500;
    res.set_content(R"({"error":"transcript exhausted"})", "application/json");
    return;
  }
  const Step& step = steps_[next_step_];
  if (req.method != step.method || req.path != step.path ||
      record.params != step.params) {
    res.status = 500;
    res.set_content(R"({"error":"request does not match transcript step"})",
                    "application/json");
    return;
  }
  ++next_step_;
  for (const auto& [key, value] : step.headers) res.set_header(key, value);
  res.status = step.status;
  if (!step.body.empty()) res.set_content(step.body, "application/json");
}

}  // namespace testsupport
