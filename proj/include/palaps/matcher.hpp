#pragma once
/// @file matcher.hpp
/// @brief Constant-space exact matching and prefix-palindrome detection.

#include <cstddef>
#include <vector>

#include "palaps/affine.hpp"
#include "palaps/text.hpp"

namespace palaps {

/// All 1-based starting positions of @p needle in @p haystack, ascending.
/// Two-way (Crochemore–Perrin) matching: O(|needle| + |haystack|) time,
/// O(|needle|) space for a scratch copy of the needle.
std::vector<std::size_t> find_occurrences(const TextHandle& needle,
                                          const TextHandle& haystack);

/// Lengths of all palindromic prefixes of @p text, ascending.  Uses a
/// doubling scheme of reversed-prefix searches; O(n) total time.
std::vector<std::size_t> prefix_palindromes(const TextHandle& text);

/// Partition of the palindromic prefixes of @p text into canonical affine
/// prefix sets (order 0 singletons and order-1 arithmetic groups, the latter
/// split further when they are not strongly affine).  At most O(log n) groups
/// before splitting.
std::vector<AffineRepr> prefix_pal_affine_sets(const TextHandle& text);

}  // namespace palaps
