#pragma once
/// @file family.hpp
/// @brief Recursive palindrome families with pairwise distinct prefix
/// profiles.
///
/// F(t, 1, d) consists of the 2^(t+1) palindromes a^i b^(3^(t+1)-2i) a^i
/// with i in [1, 2^(t+1)], over a letter pair determined by the subtree
/// index d.  For s >= 2, members are built as U·V·U from subfamilies over
/// disjoint alphabets:
///   F(1, s, d) = { UVU : U in F(1, s-1, 2d),  V in F(1, s-1, 2d+1) }
///   F(t, s, d) = { UVU : U in F(t-1, s, 2d), V in F(t, s-1, 2d+1) }  (t >= 2)
/// All members have length 3^(t+s), and the profile of palindromic-length
/// values of the prefixes (up to s) identifies each member uniquely.

#include <cstddef>
#include <utility>
#include <vector>

#include "palaps/text.hpp"

namespace palaps {

/// (prefix length, palindromic length) pairs with value <= s.
using PalprefProfile = std::vector<std::pair<std::size_t, std::size_t>>;

/// All members of F(t, s, d), each of length 3^(t+s).
std::vector<SymStr> gen_family(std::size_t t, std::size_t s, std::size_t d = 1);

/// Profile of @p x: all (i, pl(x[1..i])) with pl <= s, ascending in i.
PalprefProfile palpref_profile(const TextHandle& x, std::size_t s);

/// Reconstruct the unique member of F(t, s, d) with the given profile.
/// Throws decode_error when no member matches.
SymStr decode_family(std::size_t t, std::size_t s, const PalprefProfile& profile,
                     std::size_t d = 1);

}  // namespace palaps
