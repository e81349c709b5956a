#pragma once
/// @file text.hpp
/// @brief Constant-time views over (possibly rotated/reversed/repeated) texts.
///
/// A TextHandle is an immutable, cheaply copyable view of a symbol string.
/// It supports 1-based random access, substring, reversal, and periodic
/// repetition without copying the underlying buffer: every view is kept in a
/// canonical flattened form
///
///   at(i) = store[off + ((phase + i - 1) mod period)]        (forward)
///   at(i) = store[off + ((phase + len - i) mod period)]      (reversed)
///
/// so composing the operations only rewrites the six fields.  Only substring
/// patterns that break the single-window shape fall back to materializing a
/// fresh buffer.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

namespace palaps {

/// One text symbol.  Byte input maps each byte to one symbol; UTF-8 input
/// maps each decoded code point to one symbol.
using Symbol = char32_t;
using SymStr = std::u32string;

/// Decode / encode helpers between byte strings and symbol strings.
SymStr symbols_from_bytes(const std::string& bytes);
SymStr symbols_from_utf8(const std::string& bytes);  // throws decode_error
std::string symbols_to_display(const SymStr& s);     // UTF-8 for printable use

class TextHandle {
 public:
  /// Empty view.
  TextHandle() = default;

  /// View over a fresh copy of @p s.
  explicit TextHandle(SymStr s);
  explicit TextHandle(const std::string& bytes)
      : TextHandle(symbols_from_bytes(bytes)) {}

  /// Number of symbols in the view.
  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  /// 1-based access.
  Symbol at(std::size_t i) const {
    assert(i >= 1 && i <= len_);
    std::size_t k = rev_ ? (phase_ + len_ - i) % period_
                         : (phase_ + i - 1) % period_;
    return (*store_)[off_ + k];
  }

  /// View of positions [start, start+count-1], 1-based.  O(1) unless the
  /// request cannot be expressed over the current window, in which case the
  /// symbols are copied once.
  TextHandle substr(std::size_t start, std::size_t count) const;

  /// Same symbols in reverse order.  O(1).
  TextHandle reversed() const;

  /// The length-@p total prefix power of this view: result[i] = at(((i-1) mod
  /// size())+1).  Requires a way to express the extension in-place; copies
  /// otherwise.  With total <= size() this is substr(1, total).
  TextHandle repeat(std::size_t total) const;

  /// Plain buffer with the same symbols.
  SymStr materialize() const;

  /// True when both views spell the same symbol sequence.
  bool same_symbols(const TextHandle& other) const;

  bool operator==(const TextHandle& other) const { return same_symbols(other); }

 private:
  TextHandle(std::shared_ptr<const SymStr> store, std::size_t off,
             std::size_t period, std::size_t phase, std::size_t len, bool rev)
      : store_(std::move(store)),
        off_(off),
        period_(period),
        phase_(phase),
        len_(len),
        rev_(rev) {}

  std::shared_ptr<const SymStr> store_;
  std::size_t off_ = 0;     ///< 0-based start of the window in *store_
  std::size_t period_ = 1;  ///< window length (>= 1 whenever len_ > 0)
  std::size_t phase_ = 0;   ///< starting offset inside the window
  std::size_t len_ = 0;     ///< virtual length of the view
  bool rev_ = false;        ///< read the window backwards
};

// ---- word utilities (all positions 1-based) --------------------------------

/// Smallest p >= 1 with w[i] == w[i+p] for all valid i.  O(|w|).
std::size_t minimal_period(const TextHandle& w);

/// True when w is not a proper integer power of a shorter word.
bool is_primitive(const TextHandle& w);

/// Left rotation by s: rotation(w, s) = w[s+1..|w|] . w[1..s].  s may exceed
/// |w|; it is reduced mod |w|.
TextHandle rotation(const TextHandle& w, std::size_t s);

/// Largest e <= |t| such that t[start..e] has period q, i.e. the maximal
/// right extension of the q-periodic run beginning at @p start.  Requires
/// start + q - 1 <= |t| (a full period must fit); returns e >= start+q-1.
std::size_t max_periodic_extension(const TextHandle& t, std::size_t start,
                                   std::size_t q);

/// True when t[start..end] is a palindrome (empty ranges allowed).
bool is_palindrome(const TextHandle& t, std::size_t start, std::size_t end);

}  // namespace palaps
