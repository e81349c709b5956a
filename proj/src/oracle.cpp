/// @file oracle.cpp

#include "palaps/oracle.hpp"

#include <algorithm>
#include <limits>

namespace palaps {

namespace {

/// Rolling row of palindromic suffixes: after processing position i,
/// row[j] says whether T[j..i] is a palindrome.
void advance_pal_row(const SymStr& s, std::size_t i, std::vector<char>& row,
                     std::vector<char>& prev) {
  std::swap(row, prev);
  row.assign(i + 1, 0);
  for (std::size_t j = i; j >= 1; --j) {
    bool inner = (j + 1 > i - 1) || prev[j + 1];
    row[j] = (s[j - 1] == s[i - 1]) && inner;
  }
}

}  // namespace

std::vector<std::size_t> dp_palindromic_length(const TextHandle& t) {
  const SymStr s = t.materialize();
  const std::size_t n = s.size();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> pl(n + 1, inf);
  pl[0] = 0;
  std::vector<char> row, prev;
  for (std::size_t i = 1; i <= n; ++i) {
    advance_pal_row(s, i, row, prev);
    for (std::size_t j = 1; j <= i; ++j)
      if (row[j] && pl[j - 1] + 1 < pl[i]) pl[i] = pl[j - 1] + 1;
  }
  return pl;
}

std::vector<std::vector<bool>> dp_k_pal_prefixes(const TextHandle& t,
                                                 std::size_t k) {
  const SymStr s = t.materialize();
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> reach(k + 1,
                                       std::vector<bool>(n + 1, false));
  reach[0][0] = true;
  std::vector<char> row, prev;
  for (std::size_t i = 1; i <= n; ++i) {
    advance_pal_row(s, i, row, prev);
    for (std::size_t j = 1; j <= i; ++j) {
      if (!row[j]) continue;
      for (std::size_t lvl = 1; lvl <= k; ++lvl)
        if (reach[lvl - 1][j - 1]) reach[lvl][i] = true;
    }
  }
  return reach;
}

std::vector<SymStr> enumerate_affine(const AffineRepr& r, std::size_t cap) {
  auto strings = expand(r, cap);
  std::sort(strings.begin(), strings.end());
  strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
  return strings;
}

}  // namespace palaps
