#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tweetsent {

struct MissingCredentialError : std::runtime_error {
  explicit MissingCredentialError(std::string variable);
  std::string variable;
};

// Environment variable names for the four credential parts.
inline constexpr const char* kEnvConsumerKey = "TWITTER_CONSUMER_KEY";
inline constexpr const char* kEnvConsumerSecret = "TWITTER_CONSUMER_SECRET";
inline constexpr const char* kEnvAccessToken = "TWITTER_ACCESS_TOKEN";
inline constexpr const char* kEnvAccessTokenSecret =
    "TWITTER_ACCESS_TOKEN_SECRET";

// Opaque secrets. Never format these into log lines, error messages, or
// report output.
struct Credentials {
  std::string consumer_key;
  std::string consumer_secret;
  std::string access_token;
  std::string access_token_secret;

  bool complete() const;

  // Reads the four TWITTER_* variables; throws MissingCredentialError
  // naming the first missing or empty one.
  static Credentials from_env();
};

namespace oauth {

using Params = std::vector<std::pair<std::string, std::string>>;

// RFC 5849 percent-encoding: unreserved [A-Za-z0-9-._~] kept, everything
// else %XX with uppercase hex.
std::string percent_encode(std::string_view s);

// Lowercases scheme and host and drops default ports (80/443); the query
// string never belongs in the signature base URL.
std::string normalize_base_url(std::string_view url);

// METHOD&enc(url)&enc(sorted encoded params joined with '&').
std::string signature_base_string(std::string_view method,
                                  std::string_view url, Params params);

std::string hmac_sha1_base64(std::string_view key, std::string_view message);

// HMAC-SHA1 signature over the request; key is
// enc(consumer_secret)&enc(token_secret).
std::string sign(const Credentials& creds, std::string_view method,
                 std::string_view url, const Params& all_params);

// Full `OAuth ...` Authorization header value for a request carrying
// `query_params`, with the oauth_* parameters filled in and signed.
std::string authorization_header(const Credentials& creds,
                                 std::string_view method,
                                 std::string_view url,
                                 const Params& query_params,
                                 std::string_view nonce,
                                 std::string_view timestamp);

// 16 random bytes as lowercase hex.
std::string make_nonce();

}  // namespace oauth
}  // namespace tweetsent
