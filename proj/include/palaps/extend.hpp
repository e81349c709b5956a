#pragma once
/// @file extend.hpp
/// @brief Appending a palindrome to every string of an affine prefix set.
///
/// Given a canonical representation of a set A of prefixes of T, the
/// functions here produce affine representations whose union covers
/// { Y·P : Y ∈ A, P a nonempty palindrome, Y·P a prefix of T }, and whose
/// every member is of that form.  Long palindromes (length >= 2|Q_1|) are
/// handled either inside the leading Q_1-run or overhanging past it; shorter
/// palindromes are handled by recursing on the tail structure.

#include <cstddef>
#include <vector>

#include "palaps/affine.hpp"

namespace palaps {

enum class ExtTag {
  order0_direct,    ///< palindromic extensions of a single string
  in_run,           ///< long palindrome inside the Q_1-run
  overhang_case1,   ///< overhanging, core period longer than |Q_1|
  overhang_case2,   ///< overhanging, single core palindrome
  overhang_case3,   ///< overhanging, core period |Q_1| (run-periodic case)
  short_recursive,  ///< palindrome shorter than 2|Q_1|, handled recursively
};

struct TaggedRepr {
  AffineRepr repr;
  ExtTag tag;
};

struct ExtensionBatch {
  std::vector<TaggedRepr> sets;

  std::size_t count(ExtTag tag) const {
    std::size_t c = 0;
    for (const auto& t : sets) c += (t.tag == tag) ? 1 : 0;
    return c;
  }
};

/// Long palindromes appended entirely within the maximal Q_1-run that
/// continues the base: mirrors the run structure and truncates it to the
/// run length.  Empty when rev(Q_1) is not a rotation of Q_1.
std::vector<AffineRepr> append_long_in_run(const AffineRepr& r);

/// Long palindromes whose center lies beyond the Q_1-run: built from the
/// palindromic prefixes of the text after X·Q_1^{u_1+2} (the core
/// palindromes), mirrored tails truncated to the reverse run length.  When
/// @p include_case3 is set, core sets with period exactly |Q_1| delegate to
/// append_long_in_run instead of being skipped.
std::vector<TaggedRepr> append_long_overhanging(const AffineRepr& r,
                                                bool include_case3);

/// All palindromic extensions of a canonical representation.
ExtensionBatch append_palindrome(const AffineRepr& r);

}  // namespace palaps
