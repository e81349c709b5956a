/// @file selftest.cpp

#include "palaps/selftest.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "palaps/driver.hpp"
#include "palaps/errors.hpp"
#include "palaps/extend.hpp"
#include "palaps/family.hpp"
#include "palaps/matcher.hpp"
#include "palaps/oracle.hpp"

namespace palaps {

TextHandle random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma) {
  SymStr s;
  s.reserve(n);
  std::uniform_int_distribution<std::size_t> dist(0, sigma - 1);
  for (std::size_t i = 0; i < n; ++i)
    s.push_back(static_cast<Symbol>(U'a' + dist(rng)));
  return TextHandle(std::move(s));
}

std::vector<AffineRepr> harvest_canonical(const TextHandle& text,
                                          std::size_t max_level) {
  std::vector<AffineRepr> out;
  try {
    LevelCollection lc = compute_levels(text, max_level);
    for (std::size_t i = 1; i < lc.levels.size(); ++i)
      for (AffineRepr& r : lc.levels[i]) out.push_back(std::move(r));
  } catch (const resource_limit_error&) {
    // Keep whatever fit; harvesting is best-effort.
  }
  return out;
}

AffineRepr unnormalize(AffineRepr r, std::mt19937_64& rng, std::size_t steps) {
  std::uniform_int_distribution<int> op_dist(0, 3);
  for (std::size_t step = 0; step < steps; ++step) {
    switch (op_dist(rng)) {
      case 0: {  // extract a fixed block from the base
        if (r.x_len == 0) break;
        std::size_t c = 1 + rng() % std::min<std::size_t>(r.x_len, 3);
        r.comps.insert(r.comps.begin(),
                       {r.text.substr(r.x_len - c + 1, c), 1, 1});
        r.x_len -= c;
        break;
      }
      case 1: {  // absorb a leading word copy into the bounds
        if (r.comps.empty()) break;
        const Component& c = r.comps.front();
        std::size_t q = c.word.size();
        if (r.x_len < q ||
            !r.text.substr(r.x_len - q + 1, q).same_symbols(c.word))
          break;
        r.x_len -= q;
        ++r.comps.front().low;
        ++r.comps.front().high;
        break;
      }
      case 2: {  // inverse switch: (fixed F)(flex G) -> (rot^-y(G))(F)
        bool done = false;
        for (std::size_t i = 0; i + 1 < r.comps.size() && !done; ++i) {
          if (!r.comps[i].fixed() || r.comps[i + 1].fixed()) continue;
          Component f = r.comps[i], g = r.comps[i + 1];
          std::size_t y = static_cast<std::size_t>((f.low * f.len()) % g.len());
          std::size_t g_len = g.word.size();
          r.comps[i] = {rotation(g.word, (g_len - y % g_len) % g_len), g.low,
                        g.high};
          r.comps[i + 1] = f;
          done = true;
        }
        break;
      }
      case 3: {  // split a component with low > 1
        for (std::size_t i = 0; i < r.comps.size(); ++i) {
          if (r.comps[i].low > 1 && !r.comps[i].fixed()) {
            r = transform_split(r, i);
            break;
          }
        }
        break;
      }
    }
  }
  return r;
}

namespace {

using Check = bool (*)(std::mt19937_64&, const SelftestOptions&);

std::set<long long> length_set(const AffineRepr& r) {
  auto lens = expand_lengths(r);
  return {lens.begin(), lens.end()};
}

std::set<SymStr> string_set(const AffineRepr& r) {
  auto ss = expand(r);
  return {ss.begin(), ss.end()};
}

bool suite_text(std::mt19937_64& rng, const SelftestOptions&) {
  for (std::size_t trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 12;
    TextHandle h = random_text(rng, n, 3);
    SymStr ref = h.materialize();
    for (int step = 0; step < 6; ++step) {
      switch (rng() % 3) {
        case 0: {
          if (ref.empty()) break;
          std::size_t st = 1 + rng() % ref.size();
          std::size_t len = rng() % (ref.size() - st + 2);
          h = h.substr(st, len);
          ref = ref.substr(st - 1, len);
          break;
        }
        case 1:
          h = h.reversed();
          std::reverse(ref.begin(), ref.end());
          break;
        case 2: {
          if (ref.empty()) break;
          std::size_t total = 1 + rng() % (3 * ref.size());
          h = h.repeat(total);
          SymStr rep;
          for (std::size_t i = 0; i < total; ++i)
            rep.push_back(ref[i % ref.size()]);
          ref = rep;
          break;
        }
      }
      if (h.materialize() != ref) return false;
    }
  }
  return true;
}

bool suite_matcher(std::mt19937_64& rng, const SelftestOptions&) {
  for (std::size_t trial = 0; trial < 200; ++trial) {
    TextHandle hay = random_text(rng, 1 + rng() % 40, 2);
    TextHandle nee = random_text(rng, 1 + rng() % 6, 2);
    std::vector<std::size_t> naive;
    for (std::size_t i = 1; i + nee.size() - 1 <= hay.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 1; j <= nee.size() && ok; ++j)
        ok = hay.at(i + j - 1) == nee.at(j);
      if (ok) naive.push_back(i);
    }
    if (find_occurrences(nee, hay) != naive) return false;

    // Palindromic prefixes and their affine grouping.
    TextHandle t = random_text(rng, 1 + rng() % 40, 2);
    std::vector<std::size_t> pals;
    for (std::size_t m = 1; m <= t.size(); ++m)
      if (is_palindrome(t, 1, m)) pals.push_back(m);
    if (prefix_palindromes(t) != pals) return false;

    std::set<long long> covered;
    for (const AffineRepr& r : prefix_pal_affine_sets(t)) {
      for (long long l : expand_lengths(r)) {
        if (!covered.insert(l).second) return false;  // overlap
      }
      if (!r.comps.empty() && !(is_irreducible(r) && is_strongly_affine(r)))
        return false;
    }
    std::set<long long> expected(pals.begin(), pals.end());
    if (covered != expected) return false;
  }
  return true;
}

bool suite_affine(std::mt19937_64& rng, const SelftestOptions&) {
  for (std::size_t trial = 0; trial < 12; ++trial) {
    TextHandle t = random_text(rng, 8 + rng() % 40, 2);
    for (const AffineRepr& canon : harvest_canonical(t, 2)) {
      if (cardinality(canon) > 4096) continue;
      std::set<SymStr> ref = string_set(canon);

      AffineRepr messy = unnormalize(canon, rng, 4);
      if (string_set(messy) != ref) return false;
      if (string_set(make_irreducible(messy)) != ref) return false;

      if (!canon.comps.empty()) {
        // Strong partition: a true partition into irreducible parts.
        std::set<SymStr> covered;
        auto parts = make_strong_partition(canon);
        double bound = 1;
        for (std::size_t i = 0; i < canon.order(); ++i) bound *= 6;
        if (static_cast<double>(parts.size()) > bound) return false;
        for (const AffineRepr& p : parts)
          for (const SymStr& w : expand(p))
            if (!covered.insert(w).second) return false;
        if (covered != ref) return false;
      }

      // Truncation: equals the filtered set.
      long long m = min_length(canon) +
                    static_cast<long long>(
                        rng() % (static_cast<std::size_t>(
                                     max_length(canon) - min_length(canon)) +
                                 2));
      std::set<SymStr> kept;
      for (const AffineRepr& p : truncate_to_length(canon, m))
        for (const SymStr& w : expand(p))
          if (!kept.insert(w).second) return false;
      std::set<SymStr> expected;
      for (const SymStr& w : ref)
        if (static_cast<long long>(w.size()) <= m) expected.insert(w);
      if (kept != expected) return false;

      // member_length agrees with the enumerated lengths.
      std::set<long long> lens = length_set(canon);
      for (long long l = std::max<long long>(0, min_length(canon) - 2);
           l <= max_length(canon) + 2; ++l)
        if (member_length(canon, l) != (lens.count(l) > 0)) return false;

      // JSON round trip.
      AffineRepr back = repr_from_json(repr_to_json(canon), canon.text);
      if (string_set(back) != ref) return false;
    }
  }
  return true;
}

bool suite_extend(std::mt19937_64& rng, const SelftestOptions&) {
  for (std::size_t trial = 0; trial < 10; ++trial) {
    TextHandle t = random_text(rng, 6 + rng() % 30, 2);
    const long long n = static_cast<long long>(t.size());
    for (const AffineRepr& r : harvest_canonical(t, 2)) {
      if (cardinality(r) > 2048) continue;
      // Brute-force target: all |Y·P| with Y in the set and P a nonempty
      // palindromic continuation in the text.
      std::set<long long> target;
      for (long long y : expand_lengths(r))
        for (long long e = y + 1; e <= n; ++e)
          if (is_palindrome(t, static_cast<std::size_t>(y) + 1,
                            static_cast<std::size_t>(e)))
            target.insert(e);
      std::set<long long> got;
      for (const TaggedRepr& tr : append_palindrome(r).sets)
        for (long long l : expand_lengths(tr.repr)) got.insert(l);
      if (got != target) return false;
    }
  }
  return true;
}

bool suite_driver(std::mt19937_64& rng, const SelftestOptions& opts) {
  for (std::size_t trial = 0; trial < 30; ++trial) {
    TextHandle t = random_text(rng, 1 + rng() % 28, 2);
    const std::size_t n = t.size();
    auto reach = dp_k_pal_prefixes(t, 3);
    if (opts.inject_bug) reach[1][(trial % n) + 1] = !reach[1][(trial % n) + 1];
    LevelCollection lc = compute_levels(t, 3);
    for (std::size_t k = 1; k <= 3; ++k) {
      std::set<long long> got;
      for (const AffineRepr& r : lc.levels[k])
        for (long long l : expand_lengths(r)) got.insert(l);
      for (std::size_t i = 1; i <= n; ++i)
        if (reach[k][i] != (got.count(static_cast<long long>(i)) > 0))
          return false;
    }
    auto pl = dp_palindromic_length(t);
    if (palindromic_length(t).length != pl[n]) return false;
  }
  return true;
}

bool suite_family(std::mt19937_64&, const SelftestOptions&) {
  for (auto [t, s] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}}) {
    auto fam = gen_family(t, s);
    std::set<PalprefProfile> profiles;
    for (const SymStr& x : fam) {
      TextHandle h{x};
      if (!is_palindrome(h, 1, h.size())) return false;
      auto prof = palpref_profile(h, s);
      if (!profiles.insert(prof).second) return false;
      if (decode_family(t, s, prof) != x) return false;
    }
  }
  return true;
}

}  // namespace

bool run_selftest(const SelftestOptions& opts, std::ostream& log) {
  struct Suite {
    const char* name;
    Check fn;
  };
  const Suite suites[] = {
      {"text", suite_text},     {"matcher", suite_matcher},
      {"affine", suite_affine}, {"extend", suite_extend},
      {"driver", suite_driver}, {"family", suite_family},
  };
  bool all_ok = true;
  for (const Suite& s : suites) {
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ull + 1);
    bool ok = s.fn(rng, opts);
    log << s.name << ": " << (ok ? "ok" : "FAILED") << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok;
}

}  // namespace palaps
