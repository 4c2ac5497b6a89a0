#include "bernsum/bernoulli.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <system_error>

namespace bernsum {

namespace {

// sum_{i=0}^{n} C(n+1, i) values[i]; requires values.size() > n.
Rational residual_over(const std::vector<Rational>& values, std::size_t n) {
  Rational sum;
  BigInt c = 1;  // C(n+1, i)
  for (std::size_t i = 0; i <= n; ++i) {
    sum += Rational(c) * values[i];
    c = c * static_cast<unsigned long>(n + 1 - i) / static_cast<unsigned long>(i + 1);
  }
  return sum;
}

void validate(const std::vector<Rational>& values) {
  if (values.empty()) throw CacheCorruption("cache holds no entries (B_0 missing)");
  if (values[0] != Rational(1)) {
    throw CacheCorruption("cache entry 0 is " + values[0].str() + ", expected 1/1");
  }
  const std::size_t top = values.size() - 1;
  for (std::size_t n = top >= 3 ? top - 2 : 1; n <= top; ++n) {
    const Rational r = residual_over(values, n);
    if (!r.is_zero()) {
      throw CacheCorruption("recurrence residual at index " + std::to_string(n) + " is " +
                            r.str() + ", expected 0");
    }
  }
}

}  // namespace

BernoulliCache::BernoulliCache() : values_{Rational(1)} {}

BernoulliCache::BernoulliCache(std::vector<Rational> values) : values_(std::move(values)) {}

BernoulliCache BernoulliCache::from_values(std::vector<Rational> values) {
  validate(values);
  return BernoulliCache(std::move(values));
}

void BernoulliCache::extend_locked(std::size_t n) {
  values_.reserve(n + 1);
  for (std::size_t m = values_.size(); m <= n; ++m) {
    // Integer binomials against rational predecessors, one division per step.
    Rational sum;
    BigInt c = 1;  // C(m+1, i)
    for (std::size_t i = 0; i < m; ++i) {
      if (!values_[i].is_zero()) sum += Rational(c) * values_[i];
      c = c * static_cast<unsigned long>(m + 1 - i) / static_cast<unsigned long>(i + 1);
    }
    values_.push_back(sum / Rational(-static_cast<long>(m + 1)));
  }
}

Rational BernoulliCache::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
  return values_[n];
}

std::vector<Rational> BernoulliCache::prefix(std::size_t max) {
  {
    std::shared_lock lock(mutex_);
    if (max < values_.size()) return {values_.begin(), values_.begin() + max + 1};
  }
  std::unique_lock lock(mutex_);
  extend_locked(max);
  return {values_.begin(), values_.begin() + max + 1};
}

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void BernoulliCache::save(const std::filesystem::path& path) const {
  std::shared_lock lock(mutex_);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    for (std::size_t i = 0; i < values_.size(); ++i) out << i << ' ' << values_[i].str() << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

BernoulliCache BernoulliCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file " + path.string());

  std::vector<Rational> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto where = path.string() + ":" + std::to_string(lineno);
    const auto space = line.find(' ');
    if (space == std::string::npos) throw CacheCorruption(where + ": malformed line");
    try {
      const BigInt index = parse_bigint(std::string_view(line).substr(0, space));
      if (index != static_cast<unsigned long>(values.size())) {
        throw CacheCorruption(where + ": expected index " + std::to_string(values.size()) +
                              ", found " + to_string(index));
      }
      values.push_back(Rational::parse(std::string_view(line).substr(space + 1)));
    } catch (const CacheCorruption&) {
      throw;
    } catch (const std::exception& e) {
      throw CacheCorruption(where + ": " + e.what());
    }
  }
  try {
    return from_values(std::move(values));
  } catch (const CacheCorruption& e) {
    throw CacheCorruption(path.string() + ": " + e.what());
  }
}

Rational bernoulli(std::size_t n, BernoulliCache& cache) { return cache.get(n); }

std::vector<Rational> bernoulli_range(std::size_t max, BernoulliCache& cache) {
  return cache.prefix(max);
}

Rational recurrence_residual(std::size_t n, BernoulliCache& cache) {
  if (n == 0) throw std::domain_error("recurrence residual is defined for n >= 1 (n = 0 gives B_0 = 1)");
  return residual_over(cache.prefix(n), n);
}

}  // namespace bernsum
