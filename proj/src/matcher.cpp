/// @file matcher.cpp

#include "palaps/matcher.hpp"

#include <algorithm>
#include <cassert>

namespace palaps {

namespace {

/// Critical factorization of the needle (Crochemore–Perrin): returns the
/// 0-based index of the right half and stores the period of the right half.
/// Computed as the later of the two maximal suffixes under the normal and the
/// reversed symbol order.
std::size_t critical_factorization(const SymStr& needle, std::size_t& period) {
  const std::size_t n = needle.size();
  // Index of the last symbol of the left half, or SIZE_MAX.
  std::size_t max_suffix = SIZE_MAX, max_suffix_rev = SIZE_MAX;
  std::size_t j, k, p;

  // Lexicographic maximal suffix.
  j = 0;
  k = p = 1;
  while (j + k < n) {
    Symbol a = needle[j + k];
    Symbol b = needle[max_suffix + k];
    if (a < b) {
      j += k;
      k = 1;
      p = j - max_suffix;
    } else if (a == b) {
      if (k != p) {
        ++k;
      } else {
        j += p;
        k = 1;
      }
    } else {
      max_suffix = j++;
      k = p = 1;
    }
  }
  period = p;

  // Reverse-lexicographic maximal suffix.
  j = 0;
  k = p = 1;
  while (j + k < n) {
    Symbol a = needle[j + k];
    Symbol b = needle[max_suffix_rev + k];
    if (b < a) {
      j += k;
      k = 1;
      p = j - max_suffix_rev;
    } else if (a == b) {
      if (k != p) {
        ++k;
      } else {
        j += p;
        k = 1;
      }
    } else {
      max_suffix_rev = j++;
      k = p = 1;
    }
  }

  if (max_suffix_rev + 1 < max_suffix + 1) return max_suffix + 1;
  period = p;
  return max_suffix_rev + 1;
}

}  // namespace

std::vector<std::size_t> find_occurrences(const TextHandle& needle,
                                          const TextHandle& haystack) {
  assert(!needle.empty());
  std::vector<std::size_t> out;
  const std::size_t m = needle.size(), n = haystack.size();
  if (m > n) return out;
  const SymStr pat = needle.materialize();
  auto hay = [&](std::size_t i) { return haystack.at(i + 1); };

  std::size_t period;
  const std::size_t suffix = critical_factorization(pat, period);

  if (pat.compare(0, suffix, pat, period, suffix) == 0) {
    // Periodic needle: shift by the period, remembering the matched part.
    std::size_t memory = 0, j = 0;
    while (j <= n - m) {
      std::size_t i = std::max(suffix, memory);
      while (i < m && pat[i] == hay(i + j)) ++i;
      if (m <= i) {
        i = suffix - 1;
        while (memory < i + 1 && pat[i] == hay(i + j)) --i;
        if (i + 1 < memory + 1) out.push_back(j + 1);
        j += period;
        memory = m - period;
      } else {
        j += i - suffix + 1;
        memory = 0;
      }
    }
  } else {
    // Distinct halves: mismatches allow a maximal shift, and any two
    // occurrences are at least max(suffix, m - suffix) + 1 apart.
    period = std::max(suffix, m - suffix) + 1;
    std::size_t j = 0;
    while (j <= n - m) {
      std::size_t i = suffix;
      while (i < m && pat[i] == hay(i + j)) ++i;
      if (m <= i) {
        i = suffix - 1;
        while (i != SIZE_MAX && pat[i] == hay(i + j)) --i;
        if (i == SIZE_MAX) {
          out.push_back(j + 1);
          j += period;
        } else {
          j += period;
        }
      } else {
        j += i - suffix + 1;
      }
    }
  }
  return out;
}

std::vector<std::size_t> prefix_palindromes(const TextHandle& text) {
  std::vector<std::size_t> out;
  const std::size_t n = text.size();
  // Block p covers palindrome lengths in [p, 2p): T[1..m] is a palindrome
  // iff rev(T[1..p]) occurs at position m-p+1, since p covers the center.
  for (std::size_t p = 1; p <= n; p *= 2) {
    TextHandle window = text.substr(1, std::min(n, 2 * p - 1));
    TextHandle needle = text.substr(1, p).reversed();
    for (std::size_t i : find_occurrences(needle, window))
      out.push_back(i + p - 1);
    if (p > n / 2) break;
  }
  return out;
}

std::vector<AffineRepr> prefix_pal_affine_sets(const TextHandle& text) {
  std::vector<AffineRepr> out;
  auto emit_singleton = [&](std::size_t m) {
    AffineRepr r;
    r.text = text;
    r.x_len = m;
    out.push_back(std::move(r));
  };
  auto emit_group = [&](std::size_t x_len, std::size_t q, long long u) {
    AffineRepr r;
    r.text = text;
    r.x_len = x_len;
    r.comps.push_back({text.substr(x_len + 1, q), 1, u});
    // Two palindromic prefixes at distance q force q to be a period of the
    // longer one, and q is automatically the minimal period; hence the group
    // word is primitive and the representation irreducible.
    assert(is_irreducible(r));
    for (AffineRepr& part : canonicalize(r)) out.push_back(std::move(part));
  };

  // Greedy arithmetic grouping of the ascending palindrome lengths.
  bool have_single = false, have_group = false;
  std::size_t single_m = 0;
  std::size_t grp_x = 0, grp_q = 0, grp_last = 0;
  long long grp_u = 0;
  for (std::size_t m : prefix_palindromes(text)) {
    if (have_group) {
      if (m == grp_last + grp_q) {
        ++grp_u;
        grp_last = m;
        continue;
      }
      emit_group(grp_x, grp_q, grp_u);
      have_group = false;
      have_single = true;
      single_m = m;
      continue;
    }
    if (have_single) {
      std::size_t q = m - single_m;
      if (m >= 2 * q) {
        // Absorb: both lengths are palindromic prefixes, so q is a period
        // of T[1..m] and the pair forms the start of an arithmetic group.
        have_single = false;
        have_group = true;
        grp_x = m - 2 * q;
        grp_q = q;
        grp_u = 2;
        grp_last = m;
        continue;
      }
      emit_singleton(single_m);
      single_m = m;
      continue;
    }
    have_single = true;
    single_m = m;
  }
  if (have_group) emit_group(grp_x, grp_q, grp_u);
  if (have_single) emit_singleton(single_m);
  return out;
}

}  // namespace palaps
