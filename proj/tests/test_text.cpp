/// @file test_text.cpp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "palaps/errors.hpp"
#include "palaps/selftest.hpp"
#include "palaps/text.hpp"

using namespace palaps;

namespace {
SymStr u32(const std::string& s) { return symbols_from_bytes(s); }
}  // namespace

TEST_CASE("basic access and substr") {
  TextHandle t{std::string("abcdef")};
  CHECK(t.size() == 6);
  CHECK(t.at(1) == U'a');
  CHECK(t.at(6) == U'f');
  CHECK(t.substr(2, 3).materialize() == u32("bcd"));
  CHECK(t.substr(1, 0).empty());
  CHECK(t.substr(6, 1).materialize() == u32("f"));
}

TEST_CASE("reversed and composed views") {
  TextHandle t{std::string("abcdef")};
  CHECK(t.reversed().materialize() == u32("fedcba"));
  CHECK(t.reversed().reversed().materialize() == u32("abcdef"));
  CHECK(t.reversed().substr(2, 3).materialize() == u32("edc"));
  CHECK(t.substr(2, 4).reversed().materialize() == u32("edcb"));
}

TEST_CASE("repeat flattens periodic views") {
  TextHandle t{std::string("abc")};
  CHECK(t.repeat(8).materialize() == u32("abcabcab"));
  CHECK(t.repeat(2).materialize() == u32("ab"));
  CHECK(t.repeat(8).substr(4, 4).materialize() == u32("abca"));
  CHECK(t.repeat(8).reversed().materialize() == u32("bacbacba"));
  CHECK(t.repeat(6).repeat(9).materialize() == u32("abcabcabc"));
}

TEST_CASE("randomized view algebra against plain buffers") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 15;
    TextHandle h = random_text(rng, n, 3);
    SymStr ref = h.materialize();
    for (int step = 0; step < 8; ++step) {
      switch (rng() % 3) {
        case 0: {
          std::size_t st = 1 + rng() % ref.size();
          std::size_t len = rng() % (ref.size() - st + 2);
          if (len == 0) len = 1;
          h = h.substr(st, len);
          ref = ref.substr(st - 1, len);
          break;
        }
        case 1:
          h = h.reversed();
          std::reverse(ref.begin(), ref.end());
          break;
        case 2: {
          std::size_t total = 1 + rng() % (2 * ref.size() + 3);
          h = h.repeat(total);
          SymStr rep;
          for (std::size_t i = 0; i < total; ++i)
            rep.push_back(ref[i % ref.size()]);
          ref = rep;
          break;
        }
      }
      REQUIRE(h.materialize() == ref);
      REQUIRE(h.size() == ref.size());
      for (std::size_t i = 1; i <= ref.size(); ++i)
        REQUIRE(h.at(i) == ref[i - 1]);
    }
  }
}

TEST_CASE("periods, primitivity, rotations") {
  CHECK(minimal_period(TextHandle{std::string("ababab")}) == 2);
  CHECK(minimal_period(TextHandle{std::string("ababa")}) == 2);
  CHECK(minimal_period(TextHandle{std::string("abcab")}) == 3);
  CHECK(minimal_period(TextHandle{std::string("a")}) == 1);
  CHECK(is_primitive(TextHandle{std::string("ab")}));
  CHECK(is_primitive(TextHandle{std::string("aab")}));
  CHECK_FALSE(is_primitive(TextHandle{std::string("abab")}));
  CHECK_FALSE(is_primitive(TextHandle{std::string("aaa")}));
  CHECK(rotation(TextHandle{std::string("abcde")}, 2).materialize() ==
        u32("cdeab"));
  CHECK(rotation(TextHandle{std::string("abcde")}, 7).materialize() ==
        u32("cdeab"));
  CHECK(rotation(TextHandle{std::string("abcde")}, 0).materialize() ==
        u32("abcde"));
}

TEST_CASE("max_periodic_extension basics") {
  TextHandle t{std::string("abababcc")};
  CHECK(max_periodic_extension(t, 1, 2) == 6);
  CHECK(max_periodic_extension(t, 7, 1) == 8);
  CHECK(max_periodic_extension(t, 3, 2) == 6);
}

TEST_CASE("max_periodic_extension against naive") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    TextHandle t = random_text(rng, 4 + rng() % 20, 2);
    std::size_t n = t.size();
    std::size_t q = 1 + rng() % 4;
    std::size_t start = 1 + rng() % n;
    if (start + q - 1 > n) continue;
    std::size_t e = start + q - 1;
    while (e + 1 <= n && t.at(e + 1) == t.at(e + 1 - q)) ++e;
    REQUIRE(max_periodic_extension(t, start, q) == e);
  }
}

TEST_CASE("is_palindrome") {
  TextHandle t{std::string("abacaba")};
  CHECK(is_palindrome(t, 1, 7));
  CHECK(is_palindrome(t, 1, 3));
  CHECK(is_palindrome(t, 3, 5));
  CHECK_FALSE(is_palindrome(t, 1, 2));
  CHECK(is_palindrome(t, 4, 3));  // empty range
}

TEST_CASE("utf8 decoding") {
  CHECK(symbols_from_utf8("ab\xC3\xA9") ==
        SymStr{U'a', U'b', static_cast<Symbol>(0xE9)});
  CHECK_THROWS_AS(symbols_from_utf8("\xFF"), decode_error);
  CHECK_THROWS_AS(symbols_from_utf8("\xC3"), decode_error);
  CHECK(symbols_to_display(symbols_from_utf8("ab\xC3\xA9")) == "ab\xC3\xA9");
}
