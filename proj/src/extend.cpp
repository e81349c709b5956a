/// @file extend.cpp

#include "palaps/extend.hpp"

#include <cassert>
#include <stdexcept>

#include "palaps/errors.hpp"
#include "palaps/matcher.hpp"

namespace palaps {

namespace {

/// s = sum over tail components of (u_i + 1) * |Q_i|; for canonical
/// representations this is smaller than |Q_1|.
std::size_t tail_shift(const AffineRepr& r) {
  std::size_t s = 0;
  for (std::size_t i = 1; i < r.comps.size(); ++i)
    s += static_cast<std::size_t>(r.comps[i].high + 1) * r.comps[i].word.size();
  return s;
}

/// Length of the longest common prefix of text[from..] and word-power
/// rev-run: how far the q-periodic continuation of @p word extends,
/// optionally capped.
std::size_t power_match(const TextHandle& text, std::size_t from,
                        const TextHandle& word, std::size_t cap) {
  const std::size_t n = text.size(), q = word.size();
  std::size_t len = 0;
  while (len < cap && from + len <= n &&
         text.at(from + len) == word.at(len % q + 1))
    ++len;
  return len;
}

}  // namespace

std::vector<AffineRepr> append_long_in_run(const AffineRepr& r) {
  assert(!r.comps.empty());
  const TextHandle& q1 = r.comps.front().word;
  const std::size_t q = q1.size();
  // A long palindrome inside the run exists only if rev(Q_1) is a rotation
  // of Q_1; the rotation offset is unique since Q_1 is primitive.
  auto occ = find_occurrences(q1.reversed(), q1.repeat(2 * q - 1));
  if (occ.empty()) return {};
  const std::size_t p = occ.front() - 1;  // rev(Q_1) = rot^p(Q_1)
  const std::size_t s = tail_shift(r);
  const std::size_t d = (p + q - s % q) % q;

  // Maximal q-periodic extension of the run that continues the base.
  const std::size_t e = max_periodic_extension(r.text, r.x_len + 1, q);

  AffineRepr mirrored;
  mirrored.text = r.text;
  mirrored.x_len = r.x_len + q + d;
  mirrored.comps.push_back(
      {rotation(q1, d), 1,
       static_cast<long long>((e - r.x_len) / q)});  // floor of the run exponent
  TextHandle revrot = rotation(q1, s % q).reversed();
  for (std::size_t i = 1; i < r.comps.size(); ++i)
    mirrored.comps.push_back(
        {revrot.substr(1, r.comps[i].word.size()), 1, r.comps[i].high});
  return truncate_to_length(mirrored, static_cast<long long>(e));
}

std::vector<TaggedRepr> append_long_overhanging(const AffineRepr& r,
                                                bool include_case3) {
  assert(!r.comps.empty());
  std::vector<TaggedRepr> out;
  const TextHandle& text = r.text;
  const std::size_t n = text.size();
  const TextHandle& q1 = r.comps.front().word;
  const std::size_t q = q1.size();
  const long long u1 = r.comps.front().high;
  const std::size_t s = tail_shift(r);

  // Core palindromes start right after X·Q_1^{u_1+2}; by strong affinity
  // this position is inside the text.
  const std::size_t x = r.x_len + static_cast<std::size_t>(u1 + 2) * q + 1;
  assert(x <= n);
  const TextHandle rev_q1 = q1.reversed();
  const AffineRepr mirror = reverse_structure(r);
  bool case3_seen = false;

  for (const AffineRepr& core : prefix_pal_affine_sets(text.substr(x, n - x + 1))) {
    std::size_t core_q = core.comps.empty() ? 0 : core.comps.front().word.size();
    if (!core.comps.empty() && core_q == q) {
      case3_seen = true;  // run-periodic cores are covered by the in-run case
      continue;
    }
    if (!core.comps.empty() && core_q < q) {
      // A core with a period below |Q_1| cannot reach length 2|Q_1|:
      // its prefix would give Q_1^2 a smaller period, contradicting
      // primitivity.  Short cores are irrelevant (their centers are too
      // close to the run).
      if (static_cast<long long>(core.x_len) +
              core.comps.front().high * static_cast<long long>(core_q) >=
          2 * static_cast<long long>(q))
        throw std::logic_error(
            "overhanging: long core with short period should be impossible");
      continue;
    }

    // Carrier: the prefix of T up to the end of the (shortest) core member,
    // keeping the core's own component when it has one.
    AffineRepr carrier;
    carrier.text = text;
    carrier.x_len = (x - 1) + core.x_len;
    std::size_t first_end = carrier.x_len;  // end of the shortest member
    if (!core.comps.empty()) {
      carrier.comps.push_back(core.comps.front());
      first_end += core_q;
    }

    // How far the rev(Q_1)-power continues after the shortest core member;
    // by the periodic structure of the core this bound is shared by all of
    // its members.
    std::size_t cap = core.comps.empty()
                          ? n
                          : 2 * core_q + q;  // mismatch occurs within (VU)^2
    std::size_t alpha_len = power_match(text, first_end + 1, rev_q1, cap);

    ExtTag tag = core.comps.empty() ? ExtTag::overhang_case2
                                    : ExtTag::overhang_case1;
    for (const AffineRepr& piece :
         truncate_to_length(mirror, static_cast<long long>(alpha_len)))
      out.push_back({concat(carrier, piece), tag});
  }

  if (include_case3 && case3_seen)
    for (AffineRepr& b : append_long_in_run(r))
      out.push_back({std::move(b), ExtTag::overhang_case3});
  return out;
}

ExtensionBatch append_palindrome(const AffineRepr& r) {
  ExtensionBatch out;
  const TextHandle& text = r.text;
  const std::size_t n = text.size();

  if (r.comps.empty()) {
    // Single string: its palindromic extensions are exactly the palindromic
    // prefixes of the remaining text.
    if (r.x_len >= n) return out;
    for (const AffineRepr& c :
         prefix_pal_affine_sets(text.substr(r.x_len + 1, n - r.x_len))) {
      AffineRepr shifted;
      shifted.text = text;
      shifted.x_len = r.x_len + c.x_len;
      shifted.comps = c.comps;
      out.sets.push_back({std::move(shifted), ExtTag::order0_direct});
    }
    return out;
  }

  // Long palindromes (length >= 2|Q_1|).
  for (AffineRepr& b : append_long_in_run(r))
    out.sets.push_back({std::move(b), ExtTag::in_run});
  for (TaggedRepr& b : append_long_overhanging(r, /*include_case3=*/false))
    out.sets.push_back(std::move(b));

  // Short palindromes: append to the tail structure inside the Q_1-run.
  // The tail together with any short palindrome spans fewer than 3|Q_1|
  // symbols, and by strong affinity the text continues as a Q_1-power for
  // at least 5|Q_1| symbols after any member's Q_1-block.
  const Component& head = r.comps.front();
  const std::size_t q = head.word.size();
  AffineRepr inner;
  inner.text = head.word.repeat(3 * q);
  inner.x_len = 0;
  inner.comps.assign(r.comps.begin() + 1, r.comps.end());

  AffineRepr carrier;
  carrier.text = text;
  carrier.x_len = r.x_len;
  carrier.comps.push_back(head);

  for (const TaggedRepr& sub : append_palindrome(inner).sets)
    out.sets.push_back({concat(carrier, sub.repr), ExtTag::short_recursive});
  return out;
}

}  // namespace palaps
