/// @file palaps_cli.cpp
/// @brief Command-line surface: run the algorithms on files or stdin, dump
/// affine representations as JSON, cross-check against the quadratic
/// references, generate the lower-bound family, and benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "palaps/driver.hpp"
#include "palaps/errors.hpp"
#include "palaps/family.hpp"
#include "palaps/matcher.hpp"
#include "palaps/oracle.hpp"
#include "palaps/selftest.hpp"
#include "palaps/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

palaps::TextHandle read_input(const std::string& path, bool utf8) {
  std::string bytes;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    bytes = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open input: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    bytes = ss.str();
  }
  // Trailing newline from interactive/file input is never part of the text.
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
    bytes.pop_back();
  if (bytes.empty()) throw std::runtime_error("empty input text");
  return utf8 ? palaps::TextHandle(palaps::symbols_from_utf8(bytes))
              : palaps::TextHandle(bytes);
}

int cmd_palpref(const std::string& input, bool utf8, std::size_t k,
                const std::string& format, std::size_t cap_reprs,
                std::size_t cap_enum) {
  palaps::TextHandle t = read_input(input, utf8);
  palaps::LevelCollection lc = palaps::compute_levels(t, k, cap_reprs);
  nlohmann::ordered_json jlevels = nlohmann::ordered_json::array();
  for (std::size_t i = 1; i <= k; ++i) {
    std::set<long long> prefixes;
    for (const palaps::AffineRepr& r : lc.levels[i])
      for (long long l : palaps::expand_lengths(r, cap_enum))
        prefixes.insert(l);
    if (format == "summary") {
      std::cout << "level " << i << ": " << lc.levels[i].size() << " sets / "
                << prefixes.size() << " prefixes\n";
    } else if (format == "tsv") {
      std::cout << i << "\t" << lc.levels[i].size() << "\t" << prefixes.size()
                << "\n";
    } else {
      nlohmann::ordered_json jl;
      jl["k"] = i;
      jl["sets"] = nlohmann::ordered_json::array();
      for (const palaps::AffineRepr& r : lc.levels[i])
        jl["sets"].push_back(palaps::repr_to_json(r));
      jl["prefixes"] = prefixes;
      jlevels.push_back(std::move(jl));
    }
  }
  if (format == "json") {
    nlohmann::ordered_json out;
    out["n"] = t.size();
    out["levels"] = std::move(jlevels);
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_pal_length(const std::string& input, bool utf8,
                   const std::string& format, std::size_t cap_reprs,
                   bool no_fallback) {
  palaps::TextHandle t = read_input(input, utf8);
  palaps::PalLengthResult res =
      palaps::palindromic_length(t, cap_reprs, !no_fallback);
  if (format == "json") {
    nlohmann::ordered_json out;
    out["length"] = res.length;
    out["used_fallback"] = res.used_fallback;
    out["verify_calls"] = res.verify_calls;
    out["max_level"] = res.max_level;
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << res.length << "\t" << (res.used_fallback ? 1 : 0) << "\n";
  } else {
    std::cout << "palindromic length: " << res.length
              << (res.used_fallback ? " (via fallback)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_oracle_check(std::uint64_t seed, std::size_t trials, bool inject_bug) {
  palaps::SelftestOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.inject_bug = inject_bug;
  bool ok = palaps::run_selftest(opts, std::cout);
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_family(std::size_t t, std::size_t s, const std::string& format) {
  auto fam = palaps::gen_family(t, s);
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const palaps::SymStr& x : fam) {
      nlohmann::ordered_json jm;
      jm["member"] = palaps::symbols_to_display(x);
      jm["profile"] = nlohmann::ordered_json::array();
      for (auto [i, r] : palaps::palpref_profile(palaps::TextHandle(x), s))
        jm["profile"].push_back({i, r});
      out.push_back(std::move(jm));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const palaps::SymStr& x : fam)
      std::cout << palaps::symbols_to_display(x) << "\n";
  }
  return kExitOk;
}

int cmd_bench(std::size_t n, std::size_t k, std::uint64_t seed,
              std::size_t cap_reprs) {
  // (ab)^{n/2} with about log2(n) random letter perturbations: the
  // run-heavy regime where representation counts peak.
  std::string bytes(n, 'a');
  for (std::size_t i = 1; i < n; i += 2) bytes[i] = 'b';
  std::mt19937_64 rng(seed);
  std::size_t flips = 1;
  while ((std::size_t{1} << flips) < n) ++flips;
  for (std::size_t i = 0; i < flips; ++i) bytes[rng() % n] = 'c';
  palaps::TextHandle t{bytes};

  auto start = std::chrono::steady_clock::now();
  palaps::LevelCollection lc = palaps::compute_levels(t, k, cap_reprs);
  auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();

  std::size_t peak_reprs = 0, peak_words = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    peak_reprs = std::max(peak_reprs, lc.levels[i].size());
    std::size_t words = 0;
    for (const palaps::AffineRepr& r : lc.levels[i])
      words += r.order() + 2;  // model metric: one word per field
    peak_words = std::max(peak_words, words);
  }
  std::cout << "n\tk\twall_ms\tpeak_reprs\tpeak_words\tlevel_counts\n";
  std::cout << n << "\t" << k << "\t" << wall_ms << "\t" << peak_reprs << "\t"
            << peak_words << "\t";
  for (std::size_t i = 1; i <= k; ++i)
    std::cout << lc.levels[i].size() << (i < k ? "," : "");
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine prefix-set toolkit: k-palindromic prefixes, "
               "palindromic length, oracle checks, lower-bound families"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "summary";
  std::size_t k = 2;
  std::uint64_t seed = 1;
  std::size_t cap_reprs = palaps::kDefaultReprCap;
  std::size_t cap_enum = std::size_t{1} << 20;
  bool no_fallback = false, utf8 = false, inject_bug = false;
  std::size_t fam_t = 1, fam_s = 1, bench_n = 1'000'000, trials = 50;

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "summary"}));
    if (takes_input) {
      sub->add_option("input", input, "input file, or '-' for stdin");
      sub->add_flag("--utf8", utf8, "decode input as UTF-8 code points");
    }
  };

  CLI::App* palpref = app.add_subcommand(
      "palpref", "compressed representations of k-palindromic prefixes");
  add_common(palpref, true);
  palpref->add_option("--k", k, "number of levels");
  palpref->add_option("--cap-reprs", cap_reprs, "representation-count cap");
  palpref->add_option("--cap-enum", cap_enum, "enumeration cap");

  CLI::App* pal_length =
      app.add_subcommand("pal-length", "palindromic length of the input");
  add_common(pal_length, true);
  pal_length->add_option("--cap-reprs", cap_reprs, "representation-count cap");
  pal_length->add_flag("--no-fallback", no_fallback,
                       "fail with exit 3 instead of using the quadratic "
                       "reference beyond the cutoff");

  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "randomized equivalence suites against the references");
  oracle_check->add_option("--seed", seed, "random seed");
  oracle_check->add_option("--trials", trials, "trial count scale");
  oracle_check
      ->add_flag("--inject-bug", inject_bug,
                 "negative control: corrupt one expected value")
      ->group("");  // hidden

  CLI::App* family =
      app.add_subcommand("family", "lower-bound palindrome family F(t,s)");
  add_common(family, false);
  family->add_option("--t", fam_t, "family parameter t");
  family->add_option("--s", fam_s, "family parameter s");

  CLI::App* bench =
      app.add_subcommand("bench", "level pipeline benchmark on a run-heavy text");
  bench->add_option("--n", bench_n, "text length");
  bench->add_option("--k", k, "number of levels");
  bench->add_option("--seed", seed, "perturbation seed");
  bench->add_option("--cap-reprs", cap_reprs, "representation-count cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (palpref->parsed())
      return cmd_palpref(input, utf8, k, format, cap_reprs, cap_enum);
    if (pal_length->parsed())
      return cmd_pal_length(input, utf8, format, cap_reprs, no_fallback);
    if (oracle_check->parsed())
      return cmd_oracle_check(seed, trials, inject_bug);
    if (family->parsed()) return cmd_family(fam_t, fam_s, format);
    if (bench->parsed()) return cmd_bench(bench_n, k, seed, cap_reprs);
  } catch (const palaps::resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const palaps::enumeration_overflow& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const palaps::decode_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
