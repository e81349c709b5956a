#pragma once
/// @file selftest.hpp
/// @brief Seeded randomized self-checks (library fast paths against the
/// quadratic references), plus shared helpers for randomized testing.

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "palaps/affine.hpp"
#include "palaps/text.hpp"

namespace palaps {

struct SelftestOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  /// Negative control: deliberately corrupt one expected value so the
  /// harness must report a failure.
  bool inject_bug = false;
};

/// Runs all suites, logging one line per suite.  Returns true when every
/// suite passed.
bool run_selftest(const SelftestOptions& opts, std::ostream& log);

// ---- helpers shared with the test binaries ----------------------------------

/// Uniform random text of length n over the first sigma letters.
TextHandle random_text(std::mt19937_64& rng, std::size_t n, std::size_t sigma);

/// All canonical representations appearing in levels 1..max_level of the
/// pipeline for this text.
std::vector<AffineRepr> harvest_canonical(const TextHandle& text,
                                          std::size_t max_level);

/// Apply a random sequence of set-preserving inverse normalizations
/// (extract a fixed block from the base, absorb a word into bounds,
/// inverse switch, split) to produce a non-canonical representation of the
/// same set.
AffineRepr unnormalize(AffineRepr r, std::mt19937_64& rng, std::size_t steps);

}  // namespace palaps
