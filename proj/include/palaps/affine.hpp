#pragma once
/// @file affine.hpp
/// @brief Affine prefix sets: representation, structural transforms, and
/// normalization.
///
/// An affine representation ⟨X, (Q_1, l_1, u_1) … (Q_t, l_t, u_t)⟩ denotes the
/// set of strings { X · Q_1^{a_1} … Q_t^{a_t} : a_i ∈ [l_i, u_i] }.  Here the
/// base X is always a prefix of an ambient text, so we store only its length.
/// A representation is *irreducible* when every component is flexible with
/// l_i = 1 < u_i, the word lengths strictly decrease, and every word is
/// primitive.  It is *strongly affine* when raising every upper bound by 5
/// still yields a set of prefixes of the ambient text, and *canonical* when
/// both properties hold.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "palaps/text.hpp"

namespace palaps {

struct Component {
  TextHandle word;
  long long low = 1;
  long long high = 1;

  long long len() const { return static_cast<long long>(word.size()); }
  bool fixed() const { return low == high; }
};

struct AffineRepr {
  TextHandle text;      ///< ambient text; all generated strings are built on it
  std::size_t x_len = 0;  ///< the base is text[1 .. x_len]
  std::vector<Component> comps;

  std::size_t order() const { return comps.size(); }
  TextHandle base() const { return text.substr(1, x_len); }
};

// ---- inspection -------------------------------------------------------------

/// Number of generated strings, saturating at the maximum value.
unsigned long long cardinality(const AffineRepr& r);

long long min_length(const AffineRepr& r);
long long max_length(const AffineRepr& r);

/// Shape check: all components flexible with l = 1, strictly decreasing word
/// lengths, primitive words.
bool is_irreducible(const AffineRepr& r);

/// For an irreducible representation of a prefix set: does raising every
/// upper bound by 5 still generate only prefixes of the ambient text?
/// Checked via the longest generated string, which subsumes all others.
bool is_strongly_affine(const AffineRepr& r);

/// For a canonical representation: does the set contain a string of length n?
bool member_length(const AffineRepr& r, long long n);

/// All generated strings (unordered combinations in lexicographic exponent
/// order).  Throws enumeration_overflow when there are more than cap.
std::vector<SymStr> expand(const AffineRepr& r, std::size_t cap = 1u << 20);

/// All generated lengths (with duplicates removed).  Same cap behavior.
std::vector<long long> expand_lengths(const AffineRepr& r,
                                      std::size_t cap = 1u << 20);

// ---- elementary transforms (all set-preserving) -----------------------------

/// Swap flexible comps[i] with fixed comps[i+1]; the flexible word is rotated
/// by |comps[i+1] block| mod |comps[i] word|.
AffineRepr transform_switch(const AffineRepr& r, std::size_t i);

/// Merge adjacent components with equal words by adding their bounds.
AffineRepr transform_merge(const AffineRepr& r, std::size_t i);

/// Split comps[i] with l > 1 into a fixed part (Q, l-1, l-1) and a flexible
/// part (Q, 1, u-l+1).
AffineRepr transform_split(const AffineRepr& r, std::size_t i);

/// Absorb the leading fixed component into the base.
AffineRepr transform_truncate(const AffineRepr& r);

/// Eliminate all fixed components (switch them to the front, then truncate).
AffineRepr remove_fixed(AffineRepr r);

/// Normalize to the irreducible form generating the same set.
AffineRepr make_irreducible(AffineRepr r);

/// Partition an irreducible representation into at most 6^t parts following
/// the fixed-top-five / flexible-rest scheme; parts are returned irreducible.
std::vector<AffineRepr> make_strong_partition(const AffineRepr& r);

/// Full normalization to canonical parts: make irreducible, then partition
/// (recursively) until every part is strongly affine.
std::vector<AffineRepr> canonicalize(const AffineRepr& r);

/// Restrict an irreducible representation to the strings of length <= m.
/// Returns at most t+1 representations partitioning the restricted set.
/// Pure arithmetic on lengths and bounds; requires the length-domination
/// property of irreducible prefix-set representations.
std::vector<AffineRepr> truncate_to_length(const AffineRepr& r, long long m);

// ---- structure helpers -------------------------------------------------------

/// For S = Q_1^{u_1} … Q_t^{u_t}, returns for each j the length-|Q_j| suffix
/// of S (these are nested suffixes of S).
std::vector<TextHandle> suffix_components(const AffineRepr& r);

/// For a canonical representation over T, the mirrored tail structure
/// ⟨rev(Q_1)[1..q-s], (rev(Q̂_i), 1, u_i)_{i=1..t}⟩ over the rev(Q_1)-power of
/// length (u_1+2)·q, where Q̂_i is the length-|Q_i| suffix of rot^s(Q_1) and
/// s = Σ_{i>=2} (u_i+1)·|Q_i|.
AffineRepr reverse_structure(const AffineRepr& r);

/// Pairwise concatenation {α·β : α ∈ A, β ∈ B} over a's ambient text.  Valid
/// when every concatenated string is a prefix of a's text; b's base becomes a
/// fixed pseudo-component which is then eliminated.
AffineRepr concat(const AffineRepr& a, const AffineRepr& b);

// ---- serialization -----------------------------------------------------------

nlohmann::ordered_json repr_to_json(const AffineRepr& r);
AffineRepr repr_from_json(const nlohmann::ordered_json& j,
                          const TextHandle& text);

/// Deduplication key: canonical representations over the same text are
/// uniquely determined by the base length and the (length, low, high) shape.
std::string repr_key(const AffineRepr& r);

}  // namespace palaps
