#ifndef BERNSUM_CLI_HPP
#define BERNSUM_CLI_HPP

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bernsum/bernoulli.hpp"
#include "bernsum/exact_arith.hpp"

namespace bernsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or assertion failure
inline constexpr int kExitUsage = 2;

/// Naive summation above this n needs --force.
inline const BigInt kNaiveGuard = BigInt("100000000");

/// Runs one command line. args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// $XDG_CONFIG_HOME/bernsum/bernoulli.cache, falling back to
/// $HOME/.config/bernsum/bernoulli.cache; empty when neither is set.
std::optional<std::filesystem::path> default_cache_path();

struct BenchResult {
  BigInt n;
  std::size_t k = 0;
  std::chrono::duration<double> closed_time{};
  std::chrono::duration<double> naive_time{};
  bool values_equal = false;
  BigInt value;

  double speedup() const { return naive_time.count() / closed_time.count(); }
};

/// Median-of-iters wall time for the closed form (warm cache) and for
/// literal summation.
BenchResult run_bench(const BigInt& n, std::size_t k, std::size_t iters, BernoulliCache& cache);

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;  // empty when everything passed

  bool ok() const { return passed == total; }
};

/// Every self-check behind `verify`, in a fixed order. jobs > 1 splits the
/// power-sum grid over threads; results are identical to a sequential run.
std::vector<SuiteResult> run_verify(std::size_t max_n, std::size_t max_k, std::size_t jobs,
                                    BernoulliCache& cache);

/// Parses "A..B" with A <= B.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace bernsum::cli

#endif  // BERNSUM_CLI_HPP
