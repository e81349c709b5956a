/// @file text.cpp

#include "palaps/text.hpp"

#include <algorithm>
#include <vector>

#include "palaps/errors.hpp"

namespace palaps {

SymStr symbols_from_bytes(const std::string& bytes) {
  SymStr out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) out.push_back(static_cast<Symbol>(c));
  return out;
}

SymStr symbols_from_utf8(const std::string& bytes) {
  SymStr out;
  std::size_t i = 0, n = bytes.size();
  auto cont = [&](std::size_t k) {
    if (k >= n || (static_cast<unsigned char>(bytes[k]) & 0xC0u) != 0x80u)
      throw decode_error("malformed UTF-8 at byte " + std::to_string(k));
    return static_cast<char32_t>(static_cast<unsigned char>(bytes[k]) & 0x3Fu);
  };
  while (i < n) {
    unsigned char b = static_cast<unsigned char>(bytes[i]);
    char32_t cp;
    std::size_t adv;
    if (b < 0x80u) {
      cp = b;
      adv = 1;
    } else if ((b & 0xE0u) == 0xC0u) {
      cp = (char32_t(b & 0x1Fu) << 6) | cont(i + 1);
      adv = 2;
      if (cp < 0x80) throw decode_error("overlong UTF-8 sequence");
    } else if ((b & 0xF0u) == 0xE0u) {
      cp = (char32_t(b & 0x0Fu) << 12) | (cont(i + 1) << 6) | cont(i + 2);
      adv = 3;
      if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))
        throw decode_error("invalid UTF-8 code point");
    } else if ((b & 0xF8u) == 0xF0u) {
      cp = (char32_t(b & 0x07u) << 18) | (cont(i + 1) << 12) |
           (cont(i + 2) << 6) | cont(i + 3);
      adv = 4;
      if (cp < 0x10000 || cp > 0x10FFFF)
        throw decode_error("invalid UTF-8 code point");
    } else {
      throw decode_error("malformed UTF-8 at byte " + std::to_string(i));
    }
    out.push_back(cp);
    i += adv;
  }
  return out;
}

std::string symbols_to_display(const SymStr& s) {
  std::string out;
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

TextHandle::TextHandle(SymStr s) {
  len_ = s.size();
  period_ = std::max<std::size_t>(1, len_);
  store_ = std::make_shared<const SymStr>(std::move(s));
}

TextHandle TextHandle::substr(std::size_t start, std::size_t count) const {
  assert(start >= 1 && start + count - 1 <= len_ + (count == 0 ? 1 : 0));
  if (count == 0) return TextHandle();
  assert(start + count - 1 <= len_);
  std::size_t phase;
  if (!rev_) {
    // sub[j] = at(start+j-1) = store[off + (phase + start + j - 2) % period]
    phase = (phase_ + start - 1) % period_;
  } else {
    // sub[j] = store[off + (phase + len - start - j + 1) % period]
    //        = store[off + (phase' + count - j) % period]
    phase = (phase_ + len_ - start - count + 1 + period_) % period_;
  }
  return TextHandle(store_, off_, period_, phase, count, rev_);
}

TextHandle TextHandle::reversed() const {
  if (len_ == 0) return *this;
  // Reading the same window backwards with an unchanged phase reproduces the
  // symbols in reverse order exactly.
  return TextHandle(store_, off_, period_, phase_, len_, !rev_);
}

TextHandle TextHandle::repeat(std::size_t total) const {
  if (total <= len_) return substr(1, total);
  assert(len_ > 0 && "cannot repeat the empty view");
  if (len_ % period_ == 0) {
    if (!rev_) return TextHandle(store_, off_, period_, phase_, total, false);
    // Pick phase' with phase' + total == phase + len (mod period) so the
    // backwards formula continues the cycle.
    std::size_t phase =
        (phase_ + (len_ % period_) + period_ - (total % period_)) % period_;
    return TextHandle(store_, off_, period_, phase, total, true);
  }
  if (phase_ + len_ <= period_) {
    // Contiguous window: re-root it as its own period.
    std::size_t off = off_ + phase_;
    if (!rev_) return TextHandle(store_, off, len_, 0, total, false);
    std::size_t phase = (len_ - (total % len_)) % len_;
    return TextHandle(store_, off, len_, phase, total, true);
  }
  // Wrapping window of partial periods: copy once, then extend virtually.
  auto buf = std::make_shared<const SymStr>(materialize());
  return TextHandle(buf, 0, len_, 0, total, false);
}

SymStr TextHandle::materialize() const {
  SymStr out;
  out.reserve(len_);
  for (std::size_t i = 1; i <= len_; ++i) out.push_back(at(i));
  return out;
}

bool TextHandle::same_symbols(const TextHandle& other) const {
  if (len_ != other.len_) return false;
  for (std::size_t i = 1; i <= len_; ++i)
    if (at(i) != other.at(i)) return false;
  return true;
}

std::size_t minimal_period(const TextHandle& w) {
  std::size_t n = w.size();
  assert(n >= 1);
  // Border array (KMP failure function); minimal period = n - border(n).
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && w.at(b + 1) != w.at(i)) b = border[b];
    if (w.at(b + 1) == w.at(i)) ++b;
    border[i] = b;
  }
  return n - border[n];
}

bool is_primitive(const TextHandle& w) {
  std::size_t n = w.size();
  if (n == 0) return false;
  std::size_t p = minimal_period(w);
  return !(p < n && n % p == 0);
}

TextHandle rotation(const TextHandle& w, std::size_t s) {
  std::size_t n = w.size();
  assert(n >= 1);
  s %= n;
  if (s == 0) return w;
  return w.repeat(n + s).substr(s + 1, n);
}

std::size_t max_periodic_extension(const TextHandle& t, std::size_t start,
                                   std::size_t q) {
  assert(q >= 1 && start >= 1 && start + q - 1 <= t.size());
  std::size_t e = start + q - 1;
  while (e < t.size() && t.at(e + 1) == t.at(e + 1 - q)) ++e;
  return e;
}

bool is_palindrome(const TextHandle& t, std::size_t start, std::size_t end) {
  while (start < end) {
    if (t.at(start) != t.at(end)) return false;
    ++start;
    --end;
  }
  return true;
}

}  // namespace palaps
