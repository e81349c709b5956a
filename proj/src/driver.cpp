/// @file driver.cpp

#include "palaps/driver.hpp"

#include <cassert>
#include <cmath>
#include <unordered_set>

#include "palaps/errors.hpp"
#include "palaps/extend.hpp"
#include "palaps/matcher.hpp"
#include "palaps/oracle.hpp"

namespace palaps {

namespace {

std::vector<AffineRepr> next_level(const std::vector<AffineRepr>& prev,
                                   std::size_t level_idx,
                                   std::size_t cap_reprs) {
  std::vector<AffineRepr> out;
  std::unordered_set<std::string> seen;
  for (const AffineRepr& r : prev) {
    for (const TaggedRepr& tagged : append_palindrome(r).sets) {
      for (AffineRepr& part : canonicalize(tagged.repr)) {
        if (!seen.insert(repr_key(part)).second) continue;
        out.push_back(std::move(part));
        if (out.size() > cap_reprs)
          throw resource_limit_error(level_idx, out.size(), cap_reprs);
      }
    }
  }
  return out;
}

}  // namespace

LevelCollection compute_levels(const TextHandle& text, std::size_t k,
                               std::size_t cap_reprs) {
  LevelCollection lc;
  lc.text = text;
  lc.levels.resize(1);  // levels[0] unused
  extend_levels(lc, k, cap_reprs);
  return lc;
}

void extend_levels(LevelCollection& lc, std::size_t k, std::size_t cap_reprs) {
  if (lc.levels.empty()) lc.levels.resize(1);
  while (lc.levels.size() <= k) {
    if (lc.levels.size() == 1) {
      lc.levels.push_back(prefix_pal_affine_sets(lc.text));
      if (lc.levels[1].size() > cap_reprs)
        throw resource_limit_error(1, lc.levels[1].size(), cap_reprs);
    } else {
      lc.levels.push_back(
          next_level(lc.levels.back(), lc.levels.size(), cap_reprs));
    }
  }
}

bool is_k_palindromic(const LevelCollection& lc, std::size_t k) {
  assert(k < lc.levels.size());
  const long long n = static_cast<long long>(lc.text.size());
  for (const AffineRepr& r : lc.levels[k])
    if (member_length(r, n)) return true;
  return false;
}

namespace {

struct Side {
  long long x;  // accumulated base length
  std::vector<Component> comps;

  long long q1() const { return comps.front().len(); }
  long long u1() const { return comps.front().high; }

  long long tail_min() const {
    long long s = 0;
    for (const auto& c : comps) s += c.len();
    return s;
  }
  long long tail_max(std::size_t from) const {
    long long s = 0;
    for (std::size_t i = from; i < comps.size(); ++i)
      s += comps[i].high * comps[i].len();
    return s;
  }

  Side pinned(long long a) const {
    Side next{x + a * q1(), {comps.begin() + 1, comps.end()}};
    return next;
  }
};

bool verify_rec(const Side& a, const Side& b, long long n, std::size_t& calls) {
  ++calls;
  if (a.comps.empty() && b.comps.empty()) return a.x + b.x == n;
  if (a.comps.empty()) return verify_rec(b, a, n, calls);
  if (b.comps.empty()) {
    // One side is a single string; the first exponent of the other side is
    // forced (feasibility window of width < 1 by strong length domination).
    long long rest = n - a.x - b.x;
    long long q = a.q1();
    long long lo_rest = a.tail_min() - q;        // minimal tail after comp 1
    long long hi_rest = a.tail_max(1);           // maximal tail after comp 1
    // a1 in [ (rest - hi_rest)/q , (rest - lo_rest')/q ] where the bounds
    // are rational; at most one integer fits.
    for (long long cand = (rest - hi_rest) / q - 1;
         cand <= (rest - hi_rest) / q + 2; ++cand) {
      if (cand < 1 || cand > a.u1()) continue;
      long long rem = rest - cand * q;
      if (rem < lo_rest || rem > hi_rest) continue;
      if (verify_rec(a.pinned(cand), b, n, calls)) return true;
    }
    return false;
  }
  if (a.q1() == b.q1()) {
    // Shift exponents between the equal-length heads: some solution (if any)
    // pins the a-side head at its maximum or the b-side head at its minimum.
    Side a_pinned = a.pinned(a.u1());
    if (verify_rec(a_pinned, b, n, calls)) return true;
    Side b_pinned = b.pinned(1);
    return verify_rec(a, b_pinned, n, calls);
  }
  const Side& big = a.q1() > b.q1() ? a : b;
  const Side& small = a.q1() > b.q1() ? b : a;
  // The head exponent of the larger-period side lies strictly inside
  // ((n - xa - xb)/q - 3, (n - xa - xb)/q): at most three candidates.
  long long N = n - big.x - small.x;
  long long q = big.q1();
  for (long long cand = N / q - 3; cand <= N / q; ++cand) {
    if (cand < 1 || cand > big.u1()) continue;
    if (!(cand * q < N && (cand + 3) * q > N)) continue;
    if (verify_rec(big.pinned(cand), small, n, calls)) return true;
  }
  return false;
}

}  // namespace

bool verify_prefix_suffix(const AffineRepr& a, const AffineRepr& b,
                          long long n, std::size_t& calls) {
  Side sa{static_cast<long long>(a.x_len), a.comps};
  Side sb{static_cast<long long>(b.x_len), b.comps};
  return verify_rec(sa, sb, n, calls);
}

PalLengthResult palindromic_length(const TextHandle& text,
                                   std::size_t cap_reprs,
                                   bool allow_fallback) {
  PalLengthResult res;
  const std::size_t n = text.size();
  if (n == 0) return res;

  const std::size_t cutoff = static_cast<std::size_t>(std::ceil(
      std::sqrt(std::log2(static_cast<double>(n)) / std::log2(6.0))));

  LevelCollection pre, suf;
  pre.text = text;
  suf.text = text.reversed();

  for (std::size_t k = 1;; ++k) {
    if (k > std::max<std::size_t>(1, cutoff)) {
      if (!allow_fallback) throw resource_limit_error(k, 0, cap_reprs);
      res.length = dp_palindromic_length(text)[n];
      res.used_fallback = true;
      return res;
    }
    const std::size_t kp = (k + 1) / 2, ks = k / 2;
    try {
      extend_levels(pre, kp, cap_reprs);
      if (ks > 0) extend_levels(suf, ks, cap_reprs);
    } catch (const resource_limit_error&) {
      if (!allow_fallback) throw;
      res.length = dp_palindromic_length(text)[n];
      res.used_fallback = true;
      return res;
    }
    res.max_level = kp;
    bool hit = false;
    if (ks == 0) {
      hit = is_k_palindromic(pre, k);
    } else {
      for (const AffineRepr& ra : pre.levels[kp]) {
        for (const AffineRepr& rb : suf.levels[ks]) {
          if (verify_prefix_suffix(ra, rb, static_cast<long long>(n),
                                   res.verify_calls)) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
    }
    if (hit) {
      res.length = k;
      return res;
    }
  }
}

}  // namespace palaps
