/// @file affine.cpp

#include "palaps/affine.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "palaps/errors.hpp"

namespace palaps {

namespace {

long long floor_div(long long a, long long b) {
  assert(b > 0);
  long long q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Sum of e_i * |Q_i| over comps[i..), where e_i picks low or high.
long long tail_sum(const std::vector<Component>& comps, std::size_t from,
                   bool use_high) {
  long long s = 0;
  for (std::size_t i = from; i < comps.size(); ++i)
    s += (use_high ? comps[i].high : comps[i].low) * comps[i].len();
  return s;
}

}  // namespace

unsigned long long cardinality(const AffineRepr& r) {
  unsigned long long prod = 1;
  for (const auto& c : r.comps) {
    unsigned long long f = static_cast<unsigned long long>(c.high - c.low + 1);
    if (f != 0 && prod > std::numeric_limits<unsigned long long>::max() / f)
      return std::numeric_limits<unsigned long long>::max();
    prod *= f;
  }
  return prod;
}

long long min_length(const AffineRepr& r) {
  return static_cast<long long>(r.x_len) + tail_sum(r.comps, 0, false);
}

long long max_length(const AffineRepr& r) {
  return static_cast<long long>(r.x_len) + tail_sum(r.comps, 0, true);
}

bool is_irreducible(const AffineRepr& r) {
  for (std::size_t i = 0; i < r.comps.size(); ++i) {
    const auto& c = r.comps[i];
    if (c.low != 1 || c.high < 2) return false;
    if (i + 1 < r.comps.size() && c.len() <= r.comps[i + 1].len()) return false;
    if (!is_primitive(c.word)) return false;
  }
  return true;
}

bool is_strongly_affine(const AffineRepr& r) {
  assert(r.comps.empty() || is_irreducible(r));
  long long total = static_cast<long long>(r.x_len);
  for (const auto& c : r.comps) total += (c.high + 5) * c.len();
  if (total > static_cast<long long>(r.text.size())) return false;
  // Compare the longest raised string against the text, symbol by symbol.
  // For canonical-shaped input all other raised strings are its prefixes.
  std::size_t pos = r.x_len;
  for (const auto& c : r.comps) {
    std::size_t q = c.word.size();
    for (long long e = 0; e < c.high + 5; ++e) {
      for (std::size_t j = 1; j <= q; ++j)
        if (r.text.at(pos + j) != c.word.at(j)) return false;
      pos += q;
    }
  }
  return true;
}

bool member_length(const AffineRepr& r, long long n) {
  long long rem = n - static_cast<long long>(r.x_len);
  std::vector<long long> tmin(r.comps.size() + 1, 0),
      tmax(r.comps.size() + 1, 0);
  for (std::size_t i = r.comps.size(); i-- > 0;) {
    tmin[i] = tmin[i + 1] + r.comps[i].low * r.comps[i].len();
    tmax[i] = tmax[i + 1] + r.comps[i].high * r.comps[i].len();
  }
  // Walk components greedily; for canonical input the feasible exponent
  // window has width < 1, so branching never actually occurs.
  std::size_t i = 0;
  while (i < r.comps.size()) {
    long long q = r.comps[i].len();
    long long lo = std::max(r.comps[i].low, -floor_div(tmax[i + 1] - rem, q));
    long long hi = std::min(r.comps[i].high, floor_div(rem - tmin[i + 1], q));
    if (lo > hi) return false;
    if (lo < hi) {
      // Non-canonical fallback: try each feasible exponent recursively.
      for (long long a = lo; a <= hi; ++a) {
        AffineRepr sub = r;
        sub.comps.erase(sub.comps.begin(),
                        sub.comps.begin() + static_cast<long long>(i) + 1);
        sub.x_len = 0;
        if (member_length(sub, rem - a * q)) return true;
      }
      return false;
    }
    rem -= lo * q;
    ++i;
  }
  return rem == 0;
}

std::vector<SymStr> expand(const AffineRepr& r, std::size_t cap) {
  if (cardinality(r) > cap) throw enumeration_overflow(cap);
  std::vector<SymStr> out;
  SymStr prefix = r.base().materialize();
  // DFS over exponent choices.
  struct Frame {
    std::size_t comp;
    SymStr built;
  };
  std::vector<Frame> stack{{0, std::move(prefix)}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.comp == r.comps.size()) {
      out.push_back(std::move(f.built));
      continue;
    }
    const auto& c = r.comps[f.comp];
    SymStr w = c.word.materialize();
    SymStr cur = f.built;
    for (long long e = 1; e <= c.high; ++e) {
      cur += w;
      if (e >= c.low) stack.push_back({f.comp + 1, cur});
    }
  }
  return out;
}

std::vector<long long> expand_lengths(const AffineRepr& r, std::size_t cap) {
  if (cardinality(r) > cap) throw enumeration_overflow(cap);
  std::vector<long long> lens{static_cast<long long>(r.x_len)};
  for (const auto& c : r.comps) {
    std::vector<long long> next;
    next.reserve(lens.size() * static_cast<std::size_t>(c.high - c.low + 1));
    for (long long l : lens)
      for (long long e = c.low; e <= c.high; ++e) next.push_back(l + e * c.len());
    lens = std::move(next);
  }
  std::sort(lens.begin(), lens.end());
  lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
  return lens;
}

AffineRepr transform_switch(const AffineRepr& r, std::size_t i) {
  if (i + 1 >= r.comps.size()) throw transform_error("switch: no next component");
  const Component& flex = r.comps[i];
  const Component& fix = r.comps[i + 1];
  if (flex.fixed()) throw transform_error("switch: comps[i] must be flexible");
  if (!fix.fixed()) throw transform_error("switch: comps[i+1] must be fixed");
  AffineRepr out = r;
  std::size_t y = static_cast<std::size_t>((fix.low * fix.len()) % flex.len());
  out.comps[i] = fix;
  out.comps[i + 1] = {rotation(flex.word, y), flex.low, flex.high};
  return out;
}

AffineRepr transform_merge(const AffineRepr& r, std::size_t i) {
  if (i + 1 >= r.comps.size()) throw transform_error("merge: no next component");
  const Component& a = r.comps[i];
  const Component& b = r.comps[i + 1];
  if (!a.word.same_symbols(b.word))
    throw transform_error("merge: adjacent words differ");
  AffineRepr out = r;
  out.comps[i] = {a.word, a.low + b.low, a.high + b.high};
  out.comps.erase(out.comps.begin() + static_cast<long long>(i) + 1);
  return out;
}

AffineRepr transform_split(const AffineRepr& r, std::size_t i) {
  if (i >= r.comps.size()) throw transform_error("split: bad index");
  const Component& c = r.comps[i];
  if (c.low <= 1) throw transform_error("split: requires l > 1");
  AffineRepr out = r;
  out.comps[i] = {c.word, c.low - 1, c.low - 1};
  out.comps.insert(out.comps.begin() + static_cast<long long>(i) + 1,
                   {c.word, 1, c.high - c.low + 1});
  return out;
}

AffineRepr transform_truncate(const AffineRepr& r) {
  if (r.comps.empty() || !r.comps.front().fixed())
    throw transform_error("truncate: leading component must be fixed");
  const Component& c = r.comps.front();
#ifndef NDEBUG
  // The absorbed block must agree with the text continuation.
  for (long long e = 0; e < c.low; ++e)
    for (long long j = 1; j <= c.len(); ++j)
      assert(r.text.at(r.x_len + static_cast<std::size_t>(e * c.len() + j)) ==
             c.word.at(static_cast<std::size_t>(j)));
#endif
  AffineRepr out = r;
  out.x_len += static_cast<std::size_t>(c.low * c.len());
  out.comps.erase(out.comps.begin());
  return out;
}

AffineRepr remove_fixed(AffineRepr r) {
  for (;;) {
    std::size_t f = 0;
    while (f < r.comps.size() && !r.comps[f].fixed()) ++f;
    if (f == r.comps.size()) return r;
    while (f > 0) {
      r = transform_switch(r, f - 1);
      --f;
    }
    r = transform_truncate(r);
  }
}

AffineRepr make_irreducible(AffineRepr r) {
  for (;;) {
    r = remove_fixed(r);
    bool changed = false;
    for (std::size_t i = 0; i + 1 < r.comps.size();) {
      if (r.comps[i].len() < r.comps[i + 1].len())
        throw transform_error("make_irreducible: increasing word lengths");
      if (r.comps[i].len() == r.comps[i + 1].len()) {
        r = transform_merge(r, i);
        changed = true;
      } else {
        ++i;
      }
    }
    for (std::size_t i = 0; i < r.comps.size(); ++i) {
      if (r.comps[i].low > 1) {
        r = transform_split(r, i);
        changed = true;
      }
    }
    if (!changed) break;
  }
#ifndef NDEBUG
  assert(r.comps.empty() || is_irreducible(r));
#endif
  return r;
}

std::vector<AffineRepr> make_strong_partition(const AffineRepr& r) {
  // Per component (Q, 1, u): fixed parts (Q, a, a) for the top five exponents,
  // plus a flexible remainder (Q, 1, u-5) when it is not already covered.
  std::vector<std::vector<Component>> choices;
  for (const auto& c : r.comps) {
    std::vector<Component> opts;
    for (long long a = std::max<long long>(1, c.high - 4); a <= c.high; ++a)
      opts.push_back({c.word, a, a});
    if (c.high >= 6) opts.push_back({c.word, 1, c.high - 5});
    choices.push_back(std::move(opts));
  }
  std::vector<AffineRepr> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    AffineRepr part;
    part.text = r.text;
    part.x_len = r.x_len;
    for (std::size_t i = 0; i < choices.size(); ++i)
      part.comps.push_back(choices[i][pick[i]]);
    out.push_back(make_irreducible(std::move(part)));
    std::size_t i = choices.size();
    while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<AffineRepr> canonicalize(const AffineRepr& r) {
  AffineRepr irr = make_irreducible(r);
  if (irr.comps.empty() || is_strongly_affine(irr)) return {irr};
  std::vector<AffineRepr> out;
  for (const AffineRepr& part : make_strong_partition(irr)) {
    // Parts are irreducible; every flexible part strictly shrank an upper
    // bound, so the recursion terminates.
    auto sub = canonicalize(part);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<AffineRepr> truncate_to_length(const AffineRepr& r, long long m) {
  std::vector<long long> tmin(r.comps.size() + 1, 0),
      tmax(r.comps.size() + 1, 0);
  for (std::size_t i = r.comps.size(); i-- > 0;) {
    tmin[i] = tmin[i + 1] + r.comps[i].low * r.comps[i].len();
    tmax[i] = tmax[i + 1] + r.comps[i].high * r.comps[i].len();
  }
  std::vector<AffineRepr> out;
  long long base = static_cast<long long>(r.x_len);
  for (std::size_t i = 0;; ++i) {
    if (base + tmax[i] <= m) {
      // Everything from here on fits unchanged.
      AffineRepr piece;
      piece.text = r.text;
      piece.x_len = static_cast<std::size_t>(base);
      piece.comps.assign(r.comps.begin() + static_cast<long long>(i),
                         r.comps.end());
      out.push_back(std::move(piece));
      break;
    }
    if (i == r.comps.size() || base + tmin[i] > m) break;
    const Component& c = r.comps[i];
    long long q = c.len();
    // Smallest exponent whose choice can overflow m together with some rest.
    long long a = std::max(c.low, floor_div(m - base - tmax[i + 1], q) + 1);
    if (a > c.low) {
      AffineRepr piece;
      piece.text = r.text;
      piece.x_len = static_cast<std::size_t>(base);
      piece.comps.push_back({c.word, c.low, a - 1});
      piece.comps.insert(piece.comps.end(),
                         r.comps.begin() + static_cast<long long>(i) + 1,
                         r.comps.end());
      out.push_back(std::move(piece));
    }
    // By length domination, exponents above a always overflow; pin a.
    assert(a <= c.high);
    base += a * q;
  }
  return out;
}

std::vector<TextHandle> suffix_components(const AffineRepr& r) {
  if (r.comps.empty()) return {};
  // Collect the last |Q_1| symbols of S = Q_1^{u_1} … Q_t^{u_t}.
  std::size_t need = r.comps.front().word.size();
  SymStr tail_rev;
  for (std::size_t i = r.comps.size(); i-- > 0 && tail_rev.size() < need;) {
    const Component& c = r.comps[i];
    std::size_t q = c.word.size();
    for (long long e = 0; e < c.high && tail_rev.size() < need; ++e)
      for (std::size_t j = q; j >= 1 && tail_rev.size() < need; --j)
        tail_rev.push_back(c.word.at(j));
  }
  assert(tail_rev.size() == need);
  std::reverse(tail_rev.begin(), tail_rev.end());
  TextHandle tail{std::move(tail_rev)};
  std::vector<TextHandle> out;
  for (const Component& c : r.comps)
    out.push_back(tail.substr(need - c.word.size() + 1, c.word.size()));
  return out;
}

AffineRepr reverse_structure(const AffineRepr& r) {
  assert(!r.comps.empty());
  std::size_t q = r.comps.front().word.size();
  long long u1 = r.comps.front().high;
  std::size_t s = 0;
  for (std::size_t i = 1; i < r.comps.size(); ++i)
    s += static_cast<std::size_t>((r.comps[i].high + 1)) * r.comps[i].word.size();
  assert(s < q);
  TextHandle text2 = r.comps.front().word.reversed().repeat(
      static_cast<std::size_t>(u1 + 2) * q);
  AffineRepr out;
  out.text = text2;
  out.x_len = q - s;
  out.comps.push_back({text2.substr(q - s + 1, q), 1, u1});
  for (std::size_t i = 1; i < r.comps.size(); ++i)
    out.comps.push_back(
        {text2.substr(q - s + 1, r.comps[i].word.size()), 1, r.comps[i].high});
  return out;
}

AffineRepr concat(const AffineRepr& a, const AffineRepr& b) {
  AffineRepr out;
  out.text = a.text;
  out.x_len = a.x_len;
  out.comps = a.comps;
  if (b.x_len > 0) out.comps.push_back({b.text.substr(1, b.x_len), 1, 1});
  out.comps.insert(out.comps.end(), b.comps.begin(), b.comps.end());
  return remove_fixed(std::move(out));
}

nlohmann::ordered_json repr_to_json(const AffineRepr& r) {
  nlohmann::ordered_json j;
  if (r.x_len <= 64) {
    j["base"] = symbols_to_display(r.base().materialize());
  } else {
    j["base"] = {{"frag", {1, r.x_len}}};
  }
  j["comps"] = nlohmann::ordered_json::array();
  for (const auto& c : r.comps) {
    j["comps"].push_back({{"word", symbols_to_display(c.word.materialize())},
                          {"low", c.low},
                          {"high", c.high}});
  }
  j["order"] = r.comps.size();
  return j;
}

AffineRepr repr_from_json(const nlohmann::ordered_json& j,
                          const TextHandle& text) {
  AffineRepr r;
  r.text = text;
  const auto& base = j.at("base");
  if (base.is_string()) {
    SymStr b = symbols_from_utf8(base.get<std::string>());
    if (b.size() > text.size() ||
        !text.substr(1, b.size()).same_symbols(TextHandle(b)))
      throw decode_error("base is not a prefix of the text");
    r.x_len = b.size();
  } else {
    auto frag = base.at("frag");
    if (frag.at(0).get<std::size_t>() != 1)
      throw decode_error("base fragment must start at position 1");
    r.x_len = frag.at(1).get<std::size_t>();
    if (r.x_len > text.size()) throw decode_error("base fragment out of range");
  }
  for (const auto& cj : j.at("comps")) {
    Component c;
    c.word = TextHandle(symbols_from_utf8(cj.at("word").get<std::string>()));
    c.low = cj.at("low").get<long long>();
    c.high = cj.at("high").get<long long>();
    if (c.word.empty() || c.low < 1 || c.high < c.low)
      throw decode_error("malformed component");
    r.comps.push_back(std::move(c));
  }
  if (j.contains("order") && j.at("order").get<std::size_t>() != r.comps.size())
    throw decode_error("order field disagrees with component count");
  return r;
}

std::string repr_key(const AffineRepr& r) {
  std::string key = std::to_string(r.x_len);
  for (const auto& c : r.comps) {
    key += ';';
    key += std::to_string(c.word.size());
    key += 'x';
    key += std::to_string(c.low);
    key += '-';
    key += std::to_string(c.high);
  }
  return key;
}

}  // namespace palaps
