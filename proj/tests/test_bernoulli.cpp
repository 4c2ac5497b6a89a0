#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "doctest.h"

#include "bernsum/bernoulli.hpp"
#include "oracles.hpp"

using bernsum::BernoulliCache;
using bernsum::BigInt;
using bernsum::CacheCorruption;
using bernsum::Rational;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("bernsum_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("single values") {
  BernoulliCache cache;
  CHECK(bernsum::bernoulli(0, cache) == Rational(1));
  CHECK(bernsum::bernoulli(1, cache) == q("-1/2"));
  CHECK(bernsum::bernoulli(12, cache) == q("-691/2730"));
  CHECK(bernsum::bernoulli(24, cache) == q("-236364091/2730"));
  CHECK(bernsum::bernoulli(3, cache).str() == "0/1");
  CHECK(cache.size() == 25);
  CHECK(bernsum::bernoulli(12, cache) == q("-691/2730"));
}

TEST_CASE("published table B_1 .. B_24") {
  const std::pair<int, const char*> table[] = {
      {1, "-1/2"},        {2, "1/6"},           {4, "-1/30"},          {6, "1/42"},
      {8, "-1/30"},       {10, "5/66"},         {12, "-691/2730"},     {14, "7/6"},
      {16, "-3617/510"},  {18, "43867/798"},    {20, "-174611/330"},   {22, "854513/138"},
      {24, "-236364091/2730"}};
  BernoulliCache cache;
  for (const auto& [n, v] : table) CHECK(bernsum::bernoulli(n, cache) == q(v));
}

TEST_CASE("range") {
  BernoulliCache cache;
  CHECK(bernsum::bernoulli_range(2, cache) == std::vector{Rational(1), q("-1/2"), q("1/6")});
  CHECK(bernsum::bernoulli_range(0, cache) == std::vector{Rational(1)});
  const auto r = bernsum::bernoulli_range(14, cache);
  REQUIRE(r.size() == 15);
  CHECK(r[14] == q("7/6"));
}

TEST_CASE("recurrence agrees with Akiyama-Tanigawa up to 120") {
  BernoulliCache cache;
  const auto expected = oracle::bernoulli_akiyama_tanigawa(120);
  const auto got = bernsum::bernoulli_range(120, cache);
  for (std::size_t n = 0; n <= 120; ++n) {
    mpq_class g(got[n].num(), got[n].den());
    CHECK_MESSAGE(g == expected[n], "n = " << n);
  }
}

TEST_CASE("odd indices above 1 vanish, m = 1..100") {
  BernoulliCache cache;
  for (std::size_t m = 1; m <= 100; ++m) CHECK(bernsum::bernoulli(2 * m + 1, cache).is_zero());
}

TEST_CASE("even-index signs alternate and denominators follow von Staudt-Clausen") {
  BernoulliCache cache;
  for (unsigned long m = 1; m <= 50; ++m) {
    const Rational b = bernsum::bernoulli(2 * m, cache);
    CHECK(b.sign() == (m % 2 == 1 ? 1 : -1));
    CHECK(b.den() == oracle::staudt_clausen_denominator(2 * m));
  }
}

TEST_CASE("recurrence residual") {
  BernoulliCache cache;
  CHECK(bernsum::recurrence_residual(1, cache).str() == "0/1");
  CHECK(bernsum::recurrence_residual(5, cache).is_zero());
  CHECK(bernsum::recurrence_residual(40, cache).is_zero());
  for (std::size_t n = 1; n <= 100; ++n) CHECK(bernsum::recurrence_residual(n, cache).is_zero());
  CHECK_THROWS_AS(bernsum::recurrence_residual(0, cache), std::domain_error);
}

TEST_CASE("residual oracle: Pascal rows against Akiyama-Tanigawa values") {
  const auto b = oracle::bernoulli_akiyama_tanigawa(41);
  for (std::size_t n : {5u, 40u}) {
    const auto row = oracle::pascal_row(n + 1);
    mpq_class sum = 0;
    for (std::size_t i = 0; i <= n; ++i) sum += row[i] * b[i];
    CHECK(sum == 0);
  }
}

TEST_CASE("independent caches agree; order of requests does not matter") {
  BernoulliCache a;
  BernoulliCache b;
  const auto seq = bernsum::bernoulli_range(60, a);
  for (std::size_t n : {60u, 7u, 33u, 0u}) CHECK(bernsum::bernoulli(n, b) == seq[n]);
  CHECK(bernsum::bernoulli_range(60, b) == seq);
}

TEST_CASE("concurrent readers and extenders see one history") {
  BernoulliCache reference;
  const auto expected = bernsum::bernoulli_range(150, reference);

  BernoulliCache shared;
  std::vector<std::thread> threads;
  std::vector<int> mismatches(8, 0);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      std::mt19937 rng(static_cast<unsigned>(t));
      std::uniform_int_distribution<std::size_t> idx(0, 150);
      for (int i = 0; i < 200; ++i) {
        const std::size_t n = idx(rng);
        if (bernsum::bernoulli(n, shared) != expected[n]) ++mismatches[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) CHECK(m == 0);
  CHECK(bernsum::bernoulli_range(150, shared) == expected);
}

TEST_CASE("persistence round trip") {
  TempDir dir;
  const auto file = dir.path / "sub" / "bernoulli.cache";
  BernoulliCache cache;
  bernsum::bernoulli_range(30, cache);
  cache.save(file);

  const std::string text = read_file(file);
  CHECK(text.rfind("0 1/1\n1 -1/2\n2 1/6\n3 0/1\n4 -1/30\n", 0) == 0);

  BernoulliCache loaded = BernoulliCache::load(file);
  CHECK(loaded.size() == 31);
  CHECK(bernsum::bernoulli_range(30, loaded) == bernsum::bernoulli_range(30, cache));
  CHECK(bernsum::bernoulli(40, loaded) == bernsum::bernoulli(40, cache));
}

TEST_CASE("loader rejects corrupted files") {
  TempDir dir;
  const auto file = dir.path / "c.cache";
  BernoulliCache good;
  bernsum::bernoulli_range(30, good);
  good.save(file);
  const std::string text = read_file(file);

  SUBCASE("index gap") {
    std::string bad = text;
    bad.replace(bad.find("\n5 "), 3, "\n6 ");
    write_file(file, bad);
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("wrong top value") {
    std::string bad = text;
    bad.replace(bad.find("\n30 "), std::string::npos, "\n30 1/7\n");
    write_file(file, bad);
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("wrong value deep in the table") {
    std::string bad = text;
    bad.replace(bad.find("\n4 -1/30"), 8, "\n4 -1/31");
    write_file(file, bad);
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("B_0 not 1") {
    write_file(file, "0 2/1\n");
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("empty") {
    write_file(file, "");
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("garbage") {
    write_file(file, "0 1/1\n1 minus-half\n");
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("zero denominator") {
    write_file(file, "0 1/1\n1 -1/0\n");
    CHECK_THROWS_AS(BernoulliCache::load(file), CacheCorruption);
  }
  SUBCASE("short but valid prefix loads") {
    write_file(file, "0 1/1\n1 -1/2\n");
    CHECK(BernoulliCache::load(file).size() == 2);
  }
}
