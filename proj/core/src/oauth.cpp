#include "tweetsent/oauth.hpp"

#include <algorithm>
#include <cstdlib>

#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/rand.h>

#include "tweetsent/textutil.hpp"

namespace tweetsent {

MissingCredentialError::MissingCredentialError(std::string var)
    : std::runtime_error("missing credential environment variable: " + var),
      variable(std::move(var)) {}

bool Credentials::complete() const {
  return !consumer_key.empty() && !consumer_secret.empty() &&
         !access_token.empty() && !access_token_secret.empty();
}

Credentials Credentials::from_env() {
  auto require = [](const char* name) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0')
      throw MissingCredentialError(name);
    return std::string(value);
  };
  Credentials creds;
  creds.consumer_key = require(kEnvConsumerKey);
  creds.consumer_secret = require(kEnvConsumerSecret);
  creds.access_token = require(kEnvAccessToken);
  creds.access_token_secret = require(kEnvAccessTokenSecret);
  return creds;
}

namespace oauth {

std::string percent_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    bool unreserved = is_ascii_alpha(c) || is_ascii_digit(c) || c == '-' ||
                      c == '.' || c == '_' || c == '~';
    if (unreserved) {
      out += c;
    } else {
      auto u = static_cast<unsigned char>(c);
      out += '%';
      out += kHex[u >> 4];
      out += kHex[u & 0x0f];
    }
  }
  return out;
}

std::string normalize_base_url(std::string_view url) {
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) return std::string(url);
  std::string scheme = ascii_lower(url.substr(0, scheme_end));
  std::string_view rest = url.substr(scheme_end + 3);

  std::size_t path_start = rest.find('/');
  std::string_view hostport =
      path_start == std::string_view::npos ? rest : rest.substr(0, path_start);
  std::string_view path =
      path_start == std::string_view::npos ? "" : rest.substr(path_start);
  if (std::size_t q = path.find('?'); q != std::string_view::npos)
    path = path.substr(0, q);

  std::string host;
  std::string port;
  if (std::size_t colon = hostport.rfind(':');
      colon != std::string_view::npos) {
    host = ascii_lower(hostport.substr(0, colon));
    port = std::string(hostport.substr(colon + 1));
  } else {
    host = ascii_lower(hostport);
  }
  bool default_port = port.empty() || (scheme == "http" && port == "80") ||
                      (scheme == "https" && port == "443");

  std::string out = scheme + "://" + host;
  if (!default_port) out += ":" + port;
  out += path;
  return out;
}

std::string signature_base_string(std::string_view method,
                                  std::string_view url, Params params) {
  std::vector<std::pair<std::string, std::string>> encoded;
  encoded.reserve(params.size());
  for (const auto& [key, value] : params)
    encoded.emplace_back(percent_encode(key), percent_encode(value));
  std::sort(encoded.begin(), encoded.end());

  std::string param_string;
  for (const auto& [key, value] : encoded) {
    if (!param_string.empty()) param_string += '&';
    param_string += key + "=" + value;
  }

  std::string base(method);
  for (char& c : base)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  base += "&" + percent_encode(normalize_base_url(url));
  base += "&" + percent_encode(param_string);
  return base;
}

std::string hmac_sha1_base64(std::string_view key, std::string_view message) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  HMAC(EVP_sha1(), key.data(), static_cast<int>(key.size()),
       reinterpret_cast<const unsigned char*>(message.data()), message.size(),
       digest, &digest_len);

  unsigned char encoded[((EVP_MAX_MD_SIZE + 2) / 3) * 4 + 1];
  int encoded_len = EVP_EncodeBlock(encoded, digest, static_cast<int>(digest_len));
  return std::string(reinterpret_cast<char*>(encoded),
                     static_cast<std::size_t>(encoded_len));
}

std::string sign(const Credentials& creds, std::string_view method,
                 std::string_view url, const Params& all_params) {
  std::string base = signature_base_string(method, url, all_params);
  std::string key = percent_encode(creds.consumer_secret) + "&" +
                    percent_encode(creds.access_token_secret);
  return hmac_sha1_base64(key, base);
}

std::string authorization_header(const Credentials& creds,
                                 std::string_view method,
                                 std::string_view url,
                                 const Params& query_params,
                                 std::string_view nonce,
                                 std::string_view timestamp) {
  Params oauth_params = {
      {"oauth_consumer_key", creds.consumer_key},
      {"oauth_nonce", std::string(nonce)},
      {"oauth_signature_method", "HMAC-SHA1"},
      {"oauth_timestamp", std::string(timestamp)},
      {"oauth_token", creds.access_token},
      {"oauth_version", "1.0"},
  };
  Params all = query_params;
  all.insert(all.end(), oauth_params.begin(), oauth_params.end());
  std::string signature = sign(creds, method, url, all);

  oauth_params.emplace_back("oauth_signature", std::move(signature));
  std::sort(oauth_params.begin(), oauth_params.end());

  std::string header = "OAuth ";
  bool first = true;
  for (const auto& [key, value] : oauth_params) {
    if (!first) header += ", ";
    first = false;
    header += percent_encode(key) + "=\"" + percent_encode(value) + "\"";
  }
  return header;
}

std::string make_nonce() {
  unsigned char bytes[16];
  if (RAND_bytes(bytes, sizeof bytes) != 1) {
    // RAND_bytes only fails without an entropy source; fall back to rand().
    for (unsigned char& b : bytes)
      b = static_cast<unsigned char>(std::rand() & 0xff);
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(sizeof bytes * 2);
  for (unsigned char b : bytes) {
    out += kHex[b >> 4];
    out += kHex[b & 0x0f];
  }
  return out;
}

}  // namespace oauth
}  // namespace tweetsent
