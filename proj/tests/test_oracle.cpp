/// @file test_oracle.cpp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "palaps/oracle.hpp"
#include "palaps/selftest.hpp"

using namespace palaps;

namespace {

// Exponential-time reference: try all factorizations into exactly j
// palindromes.
bool brute_k_pal(const TextHandle& t, std::size_t start, std::size_t end,
                 std::size_t j) {
  if (j == 0) return start > end;
  if (start > end) return false;
  for (std::size_t mid = start; mid <= end; ++mid)
    if (is_palindrome(t, start, mid) && brute_k_pal(t, mid + 1, end, j - 1))
      return true;
  return false;
}

}  // namespace

TEST_CASE("palindromic length, fixed cases") {
  CHECK(dp_palindromic_length(TextHandle{std::string("abaab")}) ==
        std::vector<std::size_t>{0, 1, 2, 1, 2, 2});
  CHECK(dp_palindromic_length(TextHandle{std::string("abacaba")}).back() == 1);
  CHECK(dp_palindromic_length(TextHandle{std::string("ab")}).back() == 2);
  CHECK(dp_palindromic_length(TextHandle{std::string("abc")}).back() == 3);
}

TEST_CASE("k-palindromic prefixes against the exponential reference") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    TextHandle t = random_text(rng, 1 + rng() % 10, 2);
    auto reach = dp_k_pal_prefixes(t, 3);
    for (std::size_t j = 0; j <= 3; ++j)
      for (std::size_t i = 0; i <= t.size(); ++i)
        REQUIRE(reach[j][i] == brute_k_pal(t, 1, i, j));
  }
}

TEST_CASE("palindromic length consistent with exact reachability") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    TextHandle t = random_text(rng, 1 + rng() % 30, 3);
    auto pl = dp_palindromic_length(t);
    std::size_t pl_max = 0;
    for (std::size_t i = 1; i <= t.size(); ++i) pl_max = std::max(pl_max, pl[i]);
    auto reach = dp_k_pal_prefixes(t, pl_max);
    for (std::size_t i = 1; i <= t.size(); ++i) {
      REQUIRE(reach[pl[i]][i]);
      for (std::size_t j = 0; j < pl[i]; ++j) REQUIRE_FALSE(reach[j][i]);
    }
  }
}

TEST_CASE("enumerate_affine respects the cap") {
  std::mt19937_64 rng(1);
  TextHandle t = random_text(rng, 20, 2);
  for (const AffineRepr& r : harvest_canonical(t, 2)) {
    CHECK_NOTHROW(enumerate_affine(r));
    if (cardinality(r) > 1)
      CHECK_THROWS(enumerate_affine(r, 1));
  }
}
