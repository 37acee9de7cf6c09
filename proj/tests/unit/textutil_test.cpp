#include <doctest.h>

#include "tweetsent/textutil.hpp"

using namespace tweetsent;

TEST_CASE("ascii_lower maps only A-Z") {
  CHECK(ascii_lower("Fake NEWS 123_#") == "fake news 123_#");
  CHECK(ascii_lower("\xc3\x89") == "\xc3\x89");  // É untouched
  CHECK(ascii_lower('A') == 'a');
  CHECK(ascii_lower('z') == 'z');
  CHECK(ascii_lower('@') == '@');
}

TEST_CASE("character class predicates") {
  CHECK(is_word_char('a'));
  CHECK(is_word_char('Z'));
  CHECK(is_word_char('0'));
  CHECK(is_word_char('_'));
  CHECK_FALSE(is_word_char('-'));
  CHECK_FALSE(is_word_char(' '));
  CHECK_FALSE(is_word_char(static_cast<char>(0xc3)));

  CHECK(is_ascii_punct('!'));
  CHECK(is_ascii_punct('@'));
  CHECK(is_ascii_punct('~'));
  CHECK(is_ascii_punct('['));
  CHECK_FALSE(is_ascii_punct('a'));
  CHECK_FALSE(is_ascii_punct('5'));
  CHECK_FALSE(is_ascii_punct(' '));
}

TEST_CASE("decode_utf8 handles every sequence length") {
  auto d = decode_utf8("a", 0);
  CHECK(d.valid);
  CHECK(d.cp == U'a');
  CHECK(d.size == 1);

  d = decode_utf8("\xc3\xa9", 0);  // é
  CHECK(d.valid);
  CHECK(d.cp == 0xe9);
  CHECK(d.size == 2);

  d = decode_utf8("\xe2\x98\x95", 0);  // ☕
  CHECK(d.valid);
  CHECK(d.cp == 0x2615);
  CHECK(d.size == 3);

  d = decode_utf8("\xf0\x9f\x98\x80", 0);  // grinning face
  CHECK(d.valid);
  CHECK(d.cp == 0x1f600);
  CHECK(d.size == 4);
}

TEST_CASE("decode_utf8 rejects malformed input without stalling") {
  for (std::string bad : {"\xff", "\x80", "\xc3", "\xc0\xaf", "\xed\xa0\x80",
                          "\xe2\x28\x95", "\xf8\x88\x88\x88"}) {
    auto d = decode_utf8(bad, 0);
    CHECK_FALSE(d.valid);
    CHECK(d.size == 1);  // scanning always advances
  }
}

TEST_CASE("unicode whitespace table") {
  for (char32_t cp : {U'\t', U'\n', U'\r', U' ', char32_t(0x00a0),
                      char32_t(0x2003), char32_t(0x202f), char32_t(0x3000)})
    CHECK(is_unicode_space(cp));
  CHECK_FALSE(is_unicode_space(U'a'));
  CHECK_FALSE(is_unicode_space(char32_t(0x200b)));  // ZWSP is not whitespace
  CHECK_FALSE(is_unicode_space(char32_t(0x2615)));
}

TEST_CASE("count_codepoints") {
  CHECK(count_codepoints("") == 0);
  CHECK(count_codepoints("abc") == 3);
  CHECK(count_codepoints("h\xc3\xa9llo") == 5);
  CHECK(count_codepoints("\xe2\x98\x95") == 1);
  CHECK(count_codepoints("\xff\xfe") == 2);  // invalid bytes count one each
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("hello") != fnv1a64("hellp"));
}
