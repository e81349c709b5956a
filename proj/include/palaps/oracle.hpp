#pragma once
/// @file oracle.hpp
/// @brief Quadratic reference algorithms used to validate the fast paths.

#include <cstddef>
#include <vector>

#include "palaps/affine.hpp"
#include "palaps/text.hpp"

namespace palaps {

/// pl[i] = minimum number of palindromes whose concatenation is T[1..i],
/// for i in [0, n] (pl[0] = 0).  O(n^2) time, O(n) space.
std::vector<std::size_t> dp_palindromic_length(const TextHandle& t);

/// reach[j][i] = can T[1..i] be written as a concatenation of exactly j
/// nonempty palindromes, for j in [0, k] and i in [0, n].  O(k n^2) time.
std::vector<std::vector<bool>> dp_k_pal_prefixes(const TextHandle& t,
                                                 std::size_t k);

/// Exhaustive enumeration of an affine representation (wrapper around
/// expand); throws enumeration_overflow beyond the cap.
std::vector<SymStr> enumerate_affine(const AffineRepr& r,
                                     std::size_t cap = 1u << 20);

}  // namespace palaps
