/// @file family.cpp

#include "palaps/family.hpp"

#include <algorithm>

#include "palaps/errors.hpp"
#include "palaps/oracle.hpp"

namespace palaps {

namespace {

std::size_t pow_int(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

Symbol letter(std::size_t d, std::size_t which) {
  return static_cast<Symbol>(U'a' + 2 * d + which);
}

SymStr decode_impl(std::size_t t, std::size_t s, const PalprefProfile& profile,
                   std::size_t d) {
  if (s == 1) {
    // a^i b^(3^(t+1)-2i) a^i: i is the number of leading one-palindromic
    // prefixes.
    const std::size_t total = pow_int(3, t + 1);
    std::size_t i = 0;
    auto has = [&](std::size_t len) {
      for (const auto& [pos, r] : profile)
        if (pos == len && r == 1) return true;
      return false;
    };
    while (has(i + 1)) ++i;
    if (i < 1 || i > pow_int(2, t + 1) || 2 * i >= total)
      throw decode_error("profile does not match a base family member");
    SymStr x(i, letter(d, 0));
    x += SymStr(total - 2 * i, letter(d, 1));
    x += SymStr(i, letter(d, 0));
    return x;
  }

  const std::size_t third = pow_int(3, t + s - 1);
  const std::size_t s_u = (t >= 2) ? s : s - 1;
  PalprefProfile pu, pv;
  for (const auto& [pos, r] : profile) {
    if (pos <= third) {
      if (r <= s_u) pu.emplace_back(pos, r);
    } else if (pos <= 2 * third && r >= 2) {
      // U and V use disjoint alphabets, so pl(U·V[1..j]) = 1 + pl(V[1..j]).
      pv.emplace_back(pos - third, r - 1);
    }
  }
  SymStr u = (t >= 2) ? decode_impl(t - 1, s, pu, 2 * d)
                      : decode_impl(1, s - 1, pu, 2 * d);
  SymStr v = decode_impl(t >= 2 ? t : 1, s - 1, pv, 2 * d + 1);
  return u + v + u;
}

}  // namespace

std::vector<SymStr> gen_family(std::size_t t, std::size_t s, std::size_t d) {
  std::vector<SymStr> out;
  if (s == 1) {
    const std::size_t total = pow_int(3, t + 1);
    for (std::size_t i = 1; i <= pow_int(2, t + 1); ++i) {
      SymStr x(i, letter(d, 0));
      x += SymStr(total - 2 * i, letter(d, 1));
      x += SymStr(i, letter(d, 0));
      out.push_back(std::move(x));
    }
    return out;
  }
  std::vector<SymStr> us = (t >= 2) ? gen_family(t - 1, s, 2 * d)
                                    : gen_family(1, s - 1, 2 * d);
  std::vector<SymStr> vs = gen_family(t >= 2 ? t : 1, s - 1, 2 * d + 1);
  for (const SymStr& u : us)
    for (const SymStr& v : vs) out.push_back(u + v + u);
  return out;
}

PalprefProfile palpref_profile(const TextHandle& x, std::size_t s) {
  PalprefProfile out;
  auto pl = dp_palindromic_length(x);
  for (std::size_t i = 1; i <= x.size(); ++i)
    if (pl[i] <= s) out.emplace_back(i, pl[i]);
  return out;
}

SymStr decode_family(std::size_t t, std::size_t s, const PalprefProfile& profile,
                     std::size_t d) {
  SymStr x = decode_impl(t, s, profile, d);
  PalprefProfile check = palpref_profile(TextHandle(x), s);
  PalprefProfile given = profile;
  std::sort(given.begin(), given.end());
  if (check != given) throw decode_error("profile does not match any member");
  return x;
}

}  // namespace palaps
