/// @file acceptance.cpp
/// @brief Acceptance gate: one PASS/FAIL line per criterion, exact
/// tolerances, wall-clock timing.  Exit status 0 iff every criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "palaps/affine.hpp"
#include "palaps/driver.hpp"
#include "palaps/errors.hpp"
#include "palaps/extend.hpp"
#include "palaps/family.hpp"
#include "palaps/matcher.hpp"
#include "palaps/oracle.hpp"
#include "palaps/selftest.hpp"

using namespace palaps;

namespace {

int g_failures = 0;

void run_criterion(const char* name, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("%s %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", name,
              static_cast<long long>(ms), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::set<long long> level_union(const LevelCollection& lc, std::size_t k) {
  std::set<long long> out;
  for (const AffineRepr& r : lc.levels[k])
    for (long long l : expand_lengths(r)) out.insert(l);
  return out;
}

std::set<SymStr> strings(const AffineRepr& r) {
  auto v = expand(r);
  return {v.begin(), v.end()};
}

// ---- criterion 1: the worked 25-symbol example ------------------------------

bool golden_example(std::string& detail) {
  TextHandle t{std::string("ababaccababaccababaccabab")};
  auto pals = prefix_palindromes(t);
  if (pals != std::vector<std::size_t>{1, 3, 5, 12, 19}) {
    detail = "prefix palindromes differ";
    return false;
  }
  LevelCollection lc = compute_levels(t, 2);
  if (level_union(lc, 2).size() != 14) {
    detail = "level 2 has " + std::to_string(level_union(lc, 2).size()) +
             " prefixes, want 14";
    return false;
  }
  // The four documented level-1 sets, up to set equality of the union:
  // <a>, <aba>, <a,(ba,1,2)>, <ababa,(ccababa,1,2)>.
  std::set<SymStr> want;
  auto ins = [&](const AffineRepr& r) {
    for (const SymStr& w : expand(r)) want.insert(w);
  };
  ins({t, 1, {}});
  ins({t, 3, {}});
  ins({t, 1, {{t.substr(2, 2), 1, 2}}});
  ins({t, 5, {{t.substr(6, 7), 1, 2}}});
  std::set<SymStr> got;
  for (const AffineRepr& r : lc.levels[1])
    for (const SymStr& w : expand(r)) got.insert(w);
  if (got != want) {
    detail = "level 1 union differs from the documented sets";
    return false;
  }
  return true;
}

// ---- criteria 2 & 3: oracle equivalence -------------------------------------

bool levels_match_reference(const TextHandle& t, std::size_t k,
                            std::string& detail) {
  LevelCollection lc = compute_levels(t, k);
  auto reach = dp_k_pal_prefixes(t, k);
  for (std::size_t j = 1; j <= k; ++j) {
    std::set<long long> got = level_union(lc, j);
    for (std::size_t i = 1; i <= t.size(); ++i)
      if (reach[j][i] != (got.count(static_cast<long long>(i)) > 0)) {
        detail = "mismatch at k=" + std::to_string(j) +
                 " i=" + std::to_string(i) + " text=";
        for (std::size_t p = 1; p <= t.size(); ++p)
          detail += static_cast<char>(t.at(p));
        return false;
      }
  }
  if (palindromic_length(t).length != dp_palindromic_length(t).back()) {
    detail = "palindromic length mismatch";
    return false;
  }
  return true;
}

bool exhaustive_binary(std::string& detail) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      SymStr s;
      for (std::size_t i = 0; i < n; ++i)
        s.push_back((bits >> i) & 1 ? U'b' : U'a');
      if (!levels_match_reference(TextHandle{std::move(s)}, 3, detail))
        return false;
    }
  }
  return true;
}

bool randomized_ternary(std::string& detail) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 512;
    if (!levels_match_reference(random_text(rng, n, 3), 4, detail))
      return false;
  }
  return true;
}

// ---- criterion 4: transform preservation ------------------------------------

std::vector<AffineRepr> sample_reprs(std::size_t want) {
  std::mt19937_64 rng(99);
  std::vector<AffineRepr> out;
  while (out.size() < want) {
    TextHandle t = random_text(rng, 8 + rng() % 100, 2);
    for (AffineRepr& r : harvest_canonical(t, 3)) {
      if (r.order() > 4 || cardinality(r) > 2048) continue;
      bool small_words = true;
      for (const Component& c : r.comps) small_words &= (c.word.size() <= 8);
      if (!small_words) continue;
      out.push_back(unnormalize(std::move(r), rng, rng() % 5));
      if (out.size() == want) break;
    }
  }
  return out;
}

bool transform_preservation(std::string& detail) {
  std::size_t checked = 0;
  for (const AffineRepr& r : sample_reprs(1000)) {
    std::set<SymStr> ref = strings(r);
    for (std::size_t i = 0; i + 1 < r.comps.size(); ++i)
      if (!r.comps[i].fixed() && r.comps[i + 1].fixed())
        if (strings(transform_switch(r, i)) != ref) {
          detail = "switch broke the set";
          return false;
        }
    for (std::size_t i = 0; i + 1 < r.comps.size(); ++i)
      if (r.comps[i].word.same_symbols(r.comps[i + 1].word))
        if (strings(transform_merge(r, i)) != ref) {
          detail = "merge broke the set";
          return false;
        }
    for (std::size_t i = 0; i < r.comps.size(); ++i)
      if (r.comps[i].low > 1 && !r.comps[i].fixed())
        if (strings(transform_split(r, i)) != ref) {
          detail = "split broke the set";
          return false;
        }
    if (!r.comps.empty() && r.comps[0].fixed())
      if (strings(transform_truncate(r)) != ref) {
        detail = "truncate broke the set";
        return false;
      }
    if (strings(remove_fixed(r)) != ref) {
      detail = "remove_fixed broke the set";
      return false;
    }
    AffineRepr irr = make_irreducible(r);
    if (!is_irreducible(irr) || strings(irr) != ref) {
      detail = "make_irreducible broke the set";
      return false;
    }
    // Full normalization: a true partition into canonical blocks with block
    // count <= 6^t.
    std::set<SymStr> covered;
    auto parts = canonicalize(irr);
    double bound = 1;
    for (std::size_t i = 0; i < irr.order(); ++i) bound *= 6;
    if (static_cast<double>(parts.size()) > bound) {
      detail = "partition produced " + std::to_string(parts.size()) +
               " blocks for order " + std::to_string(irr.order());
      return false;
    }
    for (const AffineRepr& p : parts) {
      if (!is_irreducible(p) || !is_strongly_affine(p)) {
        detail = "non-canonical block in partition";
        return false;
      }
      for (const SymStr& w : expand(p))
        if (!covered.insert(w).second) {
          detail = "partition blocks overlap";
          return false;
        }
    }
    if (covered != ref) {
      detail = "partition union differs";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " representations checked";
  return true;
}

// ---- criterion 5: cardinality and order laws --------------------------------

bool structural_laws(std::string& detail) {
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    TextHandle t = random_text(rng, 8 + rng() % 120, 2);
    for (const AffineRepr& r : harvest_canonical(t, 3)) {
      ++checked;
      unsigned long long prod = 1;
      for (const Component& c : r.comps)
        prod *= static_cast<unsigned long long>(c.high);
      if (cardinality(r) != prod) {
        detail = "cardinality != product of upper bounds";
        return false;
      }
      if (cardinality(r) <= 4096 &&
          strings(r).size() != prod) {
        detail = "enumerated size != product of upper bounds";
        return false;
      }
      double log2n = std::log2(static_cast<double>(max_length(r)));
      if (static_cast<double>(r.order()) > log2n) {
        detail = "order exceeds log2 of the longest member";
        return false;
      }
      for (std::size_t i = 0; i < r.comps.size(); ++i) {
        long long tail = 0;
        for (std::size_t j = i + 1; j < r.comps.size(); ++j)
          tail += (r.comps[j].high + 5) * r.comps[j].len();
        if (r.comps[i].len() <= tail) {
          detail = "length domination violated";
          return false;
        }
      }
    }
  }
  detail = std::to_string(checked) + " canonical representations checked";
  return checked > 0;
}

// ---- criterion 6: split verification -----------------------------------------

bool verify_against_brute(std::string& detail) {
  std::mt19937_64 rng(55);
  std::size_t pairs = 0;
  while (pairs < 1000) {
    TextHandle t = random_text(rng, 4 + rng() % 80, 2);
    TextHandle rt = t.reversed();
    const long long n = static_cast<long long>(t.size());
    auto as = harvest_canonical(t, 2);
    auto bs = harvest_canonical(rt, 2);
    for (const AffineRepr& a : as) {
      for (const AffineRepr& b : bs) {
        if (pairs == 1000) break;
        ++pairs;
        bool brute = false;
        for (long long la : expand_lengths(a))
          for (long long lb : expand_lengths(b)) brute |= (la + lb == n);
        std::size_t calls = 0;
        if (verify_prefix_suffix(a, b, n, calls) != brute) {
          detail = "verdict differs from cross product";
          return false;
        }
        std::size_t bound = 1;
        for (std::size_t i = 0; i < a.order() + b.order(); ++i) bound *= 3;
        if (calls > bound) {
          detail = "call count " + std::to_string(calls) + " exceeds 3^(t+t')";
          return false;
        }
      }
    }
  }
  detail = std::to_string(pairs) + " pairs checked";
  return true;
}

// ---- criterion 7: lower-bound family ------------------------------------------

bool family_criterion(std::string& detail) {
  for (auto [t, s] :
       {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    std::size_t want_len = 1;
    for (std::size_t i = 0; i < t + s; ++i) want_len *= 3;
    std::set<PalprefProfile> profiles;
    for (const SymStr& x : gen_family(t, s)) {
      if (x.size() != want_len || !is_palindrome(TextHandle{x}, 1, x.size())) {
        detail = "member is not a palindrome of length 3^(t+s)";
        return false;
      }
      PalprefProfile prof = palpref_profile(TextHandle{x}, s);
      if (!profiles.insert(prof).second) {
        detail = "duplicate profile";
        return false;
      }
      if (decode_family(t, s, prof) != x) {
        detail = "decode(profile) != member";
        return false;
      }
    }
  }
  return true;
}

// ---- criterion 8: count growth and benchmark -----------------------------------

TextHandle perturbed_run(std::size_t n, std::mt19937_64& rng) {
  SymStr s(n, U'a');
  for (std::size_t i = 1; i < n; i += 2) s[i] = U'b';
  std::size_t flips = static_cast<std::size_t>(std::log2(n));
  for (std::size_t i = 0; i < flips; ++i) s[rng() % n] = U'c';
  return TextHandle{std::move(s)};
}

bool count_growth(std::string& detail) {
  std::mt19937_64 rng(2024);
  for (std::size_t e = 10; e <= 20; ++e) {
    std::size_t n = std::size_t{1} << e;
    TextHandle t = perturbed_run(n, rng);
    for (std::size_t k = 2; k <= 3; ++k) {
      LevelCollection lc = compute_levels(t, k);
      double cap = 64.0;
      double log2n = std::log2(static_cast<double>(n));
      for (std::size_t j = 1; j <= k; ++j) {
        double six = std::pow(6.0, static_cast<double>(j));
        cap *= six * (j + 1) * (j + 1) * log2n;
      }
      for (std::size_t j = 1; j <= k; ++j) {
        std::cout << "  count n=" << n << " k=" << j << " reprs="
                  << lc.levels[j].size() << " cap=" << static_cast<long long>(cap)
                  << "\n";
        if (static_cast<double>(lc.levels[j].size()) > cap) {
          detail = "count exceeds the model cap at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  // Benchmark: n = 10^6, k = 2 under 60 s.
  TextHandle big = perturbed_run(1'000'000, rng);
  auto start = std::chrono::steady_clock::now();
  LevelCollection lc = compute_levels(big, 2);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  detail = "bench n=1e6 k=2: " + std::to_string(lc.levels[1].size()) + "+" +
           std::to_string(lc.levels[2].size()) + " reprs in " +
           std::to_string(secs) + " s";
  return secs < 60;
}

}  // namespace

int main() {
  run_criterion("golden-example-25-symbols", golden_example);
  run_criterion("exhaustive-binary-le-14", exhaustive_binary);
  run_criterion("randomized-ternary-512", randomized_ternary);
  run_criterion("transform-preservation-1000", transform_preservation);
  run_criterion("cardinality-and-order-laws", structural_laws);
  run_criterion("verify-prefix-suffix-1000", verify_against_brute);
  run_criterion("lower-bound-family", family_criterion);
  run_criterion("count-growth-and-bench", count_growth);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
