#pragma once
/// @file driver.hpp
/// @brief Level pipeline: k-palindromic prefixes and palindromic length.

#include <cstddef>
#include <vector>

#include "palaps/affine.hpp"
#include "palaps/text.hpp"

namespace palaps {

inline constexpr std::size_t kDefaultReprCap = std::size_t{1} << 22;

/// levels[i] (1-based) holds canonical representations whose union is the
/// set of prefixes of `text` that are concatenations of exactly i nonempty
/// palindromes.
struct LevelCollection {
  TextHandle text;
  std::vector<std::vector<AffineRepr>> levels;  // levels[0] unused
};

/// Compute levels 1..k.  Throws resource_limit_error when a level would
/// exceed cap_reprs representations.
LevelCollection compute_levels(const TextHandle& text, std::size_t k,
                               std::size_t cap_reprs = kDefaultReprCap);

/// Extend an existing collection up to level k (no-op when already there).
void extend_levels(LevelCollection& lc, std::size_t k,
                   std::size_t cap_reprs = kDefaultReprCap);

/// Is the whole text a concatenation of exactly k nonempty palindromes?
bool is_k_palindromic(const LevelCollection& lc, std::size_t k);

/// Decide whether some A from a (canonical, over T) and some B from b
/// (canonical, over rev(T)) satisfy |A| + |B| = n, i.e. T = A · rev(B).
/// Pure arithmetic; at most 3^(order(a)+order(b)) recursive calls, counted
/// into calls.
bool verify_prefix_suffix(const AffineRepr& a, const AffineRepr& b,
                          long long n, std::size_t& calls);

struct PalLengthResult {
  std::size_t length = 0;
  bool used_fallback = false;   ///< answered by the quadratic reference
  std::size_t verify_calls = 0;
  std::size_t max_level = 0;    ///< deepest level pipeline actually built
};

/// Palindromic length of the text.  Builds prefix levels of T and of rev(T)
/// and verifies splits; beyond the k ~ sqrt(log_6 n) cutoff (or when the
/// representation cap is hit) it falls back to the quadratic reference,
/// unless allow_fallback is false, in which case resource_limit_error is
/// thrown.
PalLengthResult palindromic_length(const TextHandle& text,
                                   std::size_t cap_reprs = kDefaultReprCap,
                                   bool allow_fallback = true);

}  // namespace palaps
