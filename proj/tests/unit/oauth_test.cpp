#include <doctest.h>

#include <cstdlib>
#include <string>

#include "tweetsent/oauth.hpp"

using namespace tweetsent;

TEST_CASE("percent encoding keeps unreserved bytes only") {
  CHECK(oauth::percent_encode("abcXYZ019-._~") == "abcXYZ019-._~");
  CHECK(oauth::percent_encode("Ladies + Gentlemen") ==
        "Ladies%20%2B%20Gentlemen");
  CHECK(oauth::percent_encode("An encoded string!") ==
        "An%20encoded%20string%21");
  CHECK(oauth::percent_encode("Dogs, Cats & Mice") ==
        "Dogs%2C%20Cats%20%26%20Mice");
  CHECK(oauth::percent_encode("\xe2\x98\x83") == "%E2%98%83");
  CHECK(oauth::percent_encode("\xe5\xae\x89") == "%E5%AE%89");
  CHECK(oauth::percent_encode("") == "");
  CHECK(oauth::percent_encode("%") == "%25");  // never double-encode input
}

TEST_CASE("base url normalization") {
  CHECK(oauth::normalize_base_url("HTTP://Example.COM:80/r%20v/X?id=123") ==
        "http://example.com/r%20v/X");
  CHECK(oauth::normalize_base_url("https://api.twitter.com:443/1.1/x.json") ==
        "https://api.twitter.com/1.1/x.json");
  CHECK(oauth::normalize_base_url("http://127.0.0.1:8080/a") ==
        "http://127.0.0.1:8080/a");
  // A bare endpoint stays path-free; request paths are appended to it.
  CHECK(oauth::normalize_base_url("https://example.com") ==
        "https://example.com");
}

TEST_CASE("hmac-sha1 against a fixed vector") {
  // RFC 2202 test case 1: key = 20 bytes of 0x0b, data = "Hi There",
  // digest b617318655057264e28bc0b6fb378c8ef146be00 in base64.
  std::string key(20, '\x0b');
  CHECK(oauth::hmac_sha1_base64(key, "Hi There") ==
        "thcxhlUFcmTii8C2+zeMjvFGvgA=");
}

TEST_CASE("signature matches the published worked example") {
  // The HMAC-SHA1 example request that ships with the OAuth 1.0a docs.
  Credentials creds;
  creds.consumer_key = "xvz1evFS4wEEPTGEFPHBog";
  creds.consumer_secret = "kAcSOqF21Fu85e7zjz7ZN2U4ZRhfV3WpwPAoE3Z7kBw";
  creds.access_token = "370773112-GmHxMAgYyLbNEtIKZeRNFsMKPR9EyMZeS9weJAEb";
  creds.access_token_secret = "LswwdoUaIvS8ltyTt5jkRh4J50vUPVVHtR2YPi5kE";

  oauth::Params params = {
      {"status", "Hello Ladies + Gentlemen, a signed OAuth request!"},
      {"include_entities", "true"},
      {"oauth_consumer_key", creds.consumer_key},
      {"oauth_nonce", "kYjzVBB8Y0ZFabxSWbWovY3uYSQ2pTgmZeNu2VS4cg"},
      {"oauth_signature_method", "HMAC-SHA1"},
      {"oauth_timestamp", "1318622958"},
      {"oauth_token", creds.access_token},
      {"oauth_version", "1.0"},
  };
  CHECK(oauth::sign(creds, "POST",
                    "https://api.twitter.com/1.1/statuses/update.json",
                    params) == "hCtSmYh+iHYCEqBWrE7C7hYmtUk=");
}

TEST_CASE("base string and signature for the local fixture request") {
  Credentials creds;
  creds.consumer_key = "ck-fixture-key-7731";
  creds.consumer_secret = "cs-fixture-secret-L4x9";
  creds.access_token = "at-fixture-token-2209";
  creds.access_token_secret = "as-fixture-secret-Q8z3";

  oauth::Params params = {
      {"q", "fake news"},
      {"count", "100"},
      {"oauth_consumer_key", creds.consumer_key},
      {"oauth_nonce", "deadbeef00112233"},
      {"oauth_signature_method", "HMAC-SHA1"},
      {"oauth_timestamp", "1510416000"},
      {"oauth_token", creds.access_token},
      {"oauth_version", "1.0"},
  };
  std::string url = "http://127.0.0.1:8080/1.1/search/tweets.json";
  CHECK(oauth::signature_base_string("get", url, params) ==
        "GET&http%3A%2F%2F127.0.0.1%3A8080%2F1.1%2Fsearch%2Ftweets.json&"
        "count%3D100%26oauth_consumer_key%3Dck-fixture-key-7731%26"
        "oauth_nonce%3Ddeadbeef00112233%26oauth_signature_method%3DHMAC-SHA1"
        "%26oauth_timestamp%3D1510416000%26oauth_token%3Dat-fixture-token-2209"
        "%26oauth_version%3D1.0%26q%3Dfake%2520news");
  CHECK(oauth::sign(creds, "GET", url, params) ==
        "u8MULeXWo7o5QaykNEocdMkeUtI=");
}

TEST_CASE("authorization header carries signed oauth params") {
  Credentials creds;
  creds.consumer_key = "ck-fixture-key-7731";
  creds.consumer_secret = "cs-fixture-secret-L4x9";
  creds.access_token = "at-fixture-token-2209";
  creds.access_token_secret = "as-fixture-secret-Q8z3";

  oauth::Params query = {{"q", "fake news"}, {"count", "100"}};
  std::string header = oauth::authorization_header(
      creds, "GET", "http://127.0.0.1:8080/1.1/search/tweets.json", query,
      "deadbeef00112233", "1510416000");

  CHECK(header.rfind("OAuth ", 0) == 0);
  CHECK(header.find("oauth_consumer_key=\"ck-fixture-key-7731\"") !=
        std::string::npos);
  CHECK(header.find("oauth_nonce=\"deadbeef00112233\"") != std::string::npos);
  CHECK(header.find("oauth_signature_method=\"HMAC-SHA1\"") !=
        std::string::npos);
  CHECK(header.find("oauth_timestamp=\"1510416000\"") != std::string::npos);
  CHECK(header.find("oauth_token=\"at-fixture-token-2209\"") !=
        std::string::npos);
  CHECK(header.find("oauth_version=\"1.0\"") != std::string::npos);
  CHECK(header.find("oauth_signature=\"u8MULeXWo7o5QaykNEocdMkeUtI%3D\"") !=
        std::string::npos);
  // Query parameters sign the request but never ride in the header.
  CHECK(header.find("q=") == std::string::npos);
  // Secrets must not leak into the header either.
  CHECK(header.find("cs-fixture-secret-L4x9") == std::string::npos);
  CHECK(header.find("as-fixture-secret-Q8z3") == std::string::npos);
}

TEST_CASE("nonces are 32 hex chars and vary") {
  std::string a = oauth::make_nonce();
  std::string b = oauth::make_nonce();
  CHECK(a.size() == 32);
  for (char c : a) {
    bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    CHECK(hex);
  }
  CHECK(a != b);
}

TEST_CASE("credentials load from the environment") {
  setenv(kEnvConsumerKey, "k1", 1);
  setenv(kEnvConsumerSecret, "k2", 1);
  setenv(kEnvAccessToken, "k3", 1);
  setenv(kEnvAccessTokenSecret, "k4", 1);
  Credentials c = Credentials::from_env();
  CHECK(c.consumer_key == "k1");
  CHECK(c.consumer_secret == "k2");
  CHECK(c.access_token == "k3");
  CHECK(c.access_token_secret == "k4");
  CHECK(c.complete());

  unsetenv(kEnvAccessToken);
  try {
    Credentials::from_env();
    FAIL("expected MissingCredentialError");
  } catch (const MissingCredentialError& e) {
    CHECK(e.variable == kEnvAccessToken);
  }

  setenv(kEnvAccessToken, "", 1);  // empty counts as missing
  CHECK_THROWS_AS(Credentials::from_env(), MissingCredentialError);

  unsetenv(kEnvConsumerKey);
  unsetenv(kEnvConsumerSecret);
  unsetenv(kEnvAccessToken);
  unsetenv(kEnvAccessTokenSecret);
}

TEST_CASE("complete() requires all four parts") {
  Credentials c;
  CHECK_FALSE(c.complete());
  c.consumer_key = "a";
  c.consumer_secret = "b";
  c.access_token = "c";
  CHECK_FALSE(c.complete());
  c.access_token_secret = "d";
  CHECK(c.complete());
}
