#ifndef BERNSUM_BERNOULLI_HPP
#define BERNSUM_BERNOULLI_HPP

#include <cstddef>
#include <filesystem>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "bernsum/exact_arith.hpp"

namespace bernsum {

/// Raised when a persisted cache fails validation on load.
class CacheCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grow-only memo table of Bernoulli numbers B_0, B_1, ... (B_1 = -1/2).
///
/// Entries are contiguous from index 0 and never change once inserted.
/// Readers of an already computed prefix only take a shared lock; extension
/// is serialized, so concurrent callers observe a single-writer history.
class BernoulliCache {
 public:
  BernoulliCache();
  BernoulliCache(const BernoulliCache&) = delete;
  BernoulliCache& operator=(const BernoulliCache&) = delete;

  /// B_n, computing and storing every missing index up to n.
  Rational get(std::size_t n);

  /// [B_0, ..., B_max].
  std::vector<Rational> prefix(std::size_t max);

  /// Number of stored entries (highest stored index + 1).
  std::size_t size() const;

  /// Writes one "<index> <num>/<den>" line per entry. The file is replaced
  /// atomically via a temporary sibling.
  void save(const std::filesystem::path& path) const;

  /// Reads a file written by save(). Checks that indices run 0, 1, 2, ...,
  /// that B_0 = 1, and that the recurrence residual of the top three indices
  /// vanishes. Throws CacheCorruption on any failure.
  static BernoulliCache load(const std::filesystem::path& path);

  /// Builds a cache from an explicit sequence, applying the same checks as
  /// load().
  static BernoulliCache from_values(std::vector<Rational> values);

 private:
  explicit BernoulliCache(std::vector<Rational> values);
  void extend_locked(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

/// B_n from the recurrence B_n = -1/(n+1) * sum_{i<n} C(n+1, i) B_i, B_0 = 1.
/// Odd indices above 1 go through the recurrence like every other index.
Rational bernoulli(std::size_t n, BernoulliCache& cache);

/// [B_0, ..., B_max] in index order.
std::vector<Rational> bernoulli_range(std::size_t max, BernoulliCache& cache);

/// sum_{i=0}^{n} C(n+1, i) B_i, which vanishes for every n >= 1.
/// Throws std::domain_error for n = 0.
Rational recurrence_residual(std::size_t n, BernoulliCache& cache);

}  // namespace bernsum

#endif  // BERNSUM_BERNOULLI_HPP
