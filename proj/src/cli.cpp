#include "bernsum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "bernsum/analysis.hpp"
#include "bernsum/faulhaber.hpp"
#include "bernsum/format.hpp"

namespace bernsum::cli {

namespace {

// Bad argument values that CLI11 cannot see (ranges, big integers).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification step disagreed; carries the message to print.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kFaulhaberCheckMaxN = 50;

struct CacheHandle {
  std::unique_ptr<BernoulliCache> cache;
  std::optional<std::filesystem::path> path;
  std::size_t loaded_size = 0;
};

CacheHandle open_cache(const std::string& option) {
  CacheHandle h;
  if (option == "none") {
    h.cache = std::make_unique<BernoulliCache>();
  } else {
    h.path = option.empty() ? default_cache_path() : std::optional(std::filesystem::path(option));
    if (h.path && std::filesystem::exists(*h.path)) {
      h.cache.reset(new BernoulliCache(BernoulliCache::load(*h.path)));
    } else {
      h.cache = std::make_unique<BernoulliCache>();
    }
  }
  h.loaded_size = h.cache->size();
  return h;
}

void persist(const CacheHandle& h, std::ostream& err) {
  if (!h.path || h.cache->size() <= h.loaded_size) return;
  try {
    h.cache->save(*h.path);
  } catch (const std::exception& e) {
    err << "warning: could not save cache: " << e.what() << '\n';
  }
}

BigInt parse_nonnegative(const std::string& text, const char* what) {
  BigInt v;
  try {
    v = parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  if (sgn(v) < 0) throw UsageError(std::string(what) + " must be nonnegative, got " + text);
  return v;
}

Style style_of(const std::string& format) { return format == "latex" ? Style::latex : Style::plain; }

// Compares S^k(n) against literal summation for n = 1..50.
void check_against_oracle(std::size_t k, const Polynomial& s) {
  for (unsigned long n = 1; n <= kFaulhaberCheckMaxN; ++n) {
    const Rational closed = poly_eval(s, BigInt(n));
    const BigInt naive = power_sum_naive(BigInt(n), k);
    if (closed != Rational(naive)) {
      throw CheckFailure("S^" + std::to_string(k) + " disagrees with summation at n = " +
                         std::to_string(n) + ": closed " + closed.str() + ", naive " +
                         to_string(naive));
    }
  }
}

int cmd_bernoulli(std::size_t max, const std::string& format, BernoulliCache& cache,
                  std::ostream& out) {
  const auto values = bernoulli_range(max, cache);
  if (format == "json") {
    out << bernoulli_to_json(values).dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << render_bernoulli(i, values[i], style_of(format)) << '\n';
  }
  return kExitOk;
}

int cmd_faulhaber(std::size_t first, std::size_t last, bool factored, const std::string& format,
                  BernoulliCache& cache, std::ostream& out) {
  std::vector<std::string> lines;
  for (std::size_t k = first; k <= last; ++k) {
    const Polynomial s = faulhaber_poly(k, cache);
    check_against_oracle(k, s);
    if (format == "json") {
      lines.push_back(factored ? factored_to_json(factored_form(k, cache)).dump()
                               : power_sum_to_json(k, s).dump());
    } else if (factored) {
      lines.push_back(render_factored(factored_form(k, cache), style_of(format)));
    } else {
      lines.push_back(render_power_sum(k, s, style_of(format)));
    }
  }
  if (format == "json" && first != last) {
    out << "[\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      out << lines[i] << (i + 1 < lines.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return kExitOk;
  }
  for (const auto& line : lines) out << line << '\n';
  return kExitOk;
}

int cmd_sum(const BigInt& n, std::size_t k, const std::string& mode, bool force,
            BernoulliCache& cache, std::ostream& out, std::ostream& err) {
  if (mode != "closed" && n > kNaiveGuard && !force) {
    throw UsageError("naive summation with n > 10^8 can take hours; pass --force to run it");
  }
  if (mode == "closed") {
    out << to_string(power_sum_closed(n, k, cache)) << '\n';
    return kExitOk;
  }
  if (mode == "naive") {
    out << to_string(power_sum_naive(n, k)) << '\n';
    return kExitOk;
  }
  const auto v = verify_power_sum(n, k, cache);
  if (!v.match) {
    err << "mismatch for n = " << to_string(n) << ", k = " << k << "\n  closed: "
        << to_string(v.closed_value) << "\n  naive:  " << to_string(v.oracle_value) << '\n';
    return kExitFailure;
  }
  out << to_string(v.closed_value) << '\n';
  return kExitOk;
}

int cmd_verify(std::size_t max_n, std::size_t max_k, std::size_t jobs, BernoulliCache& cache,
               std::ostream& out, std::ostream& err) {
  const auto suites = run_verify(max_n, max_k, jobs, cache);
  bool all_ok = true;
  for (const auto& s : suites) {
    out << std::left << std::setw(34) << s.name << s.passed << "/" << s.total << " passed\n";
    if (!s.ok() && all_ok) {
      err << "first failure: " << s.first_failure << '\n';
      all_ok = false;
    }
  }
  out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
  return all_ok ? kExitOk : kExitFailure;
}

std::string format_ms(std::chrono::duration<double> d) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << d.count() * 1e3;
  return os.str();
}

int cmd_bench(const BigInt& n, std::size_t k, std::size_t iters, BernoulliCache& cache,
              std::ostream& out, std::ostream& err) {
  const auto r = run_bench(n, k, iters, cache);
  if (!r.values_equal) {
    err << "closed form and summation disagree for n = " << to_string(n) << ", k = " << k << '\n';
    return kExitFailure;
  }
  std::ostringstream speed;
  speed << std::fixed << std::setprecision(1) << r.speedup() << "x";
  out << std::left << std::setw(12) << "n" << std::setw(6) << "k" << std::setw(14) << "closed_ms"
      << std::setw(14) << "naive_ms" << std::setw(12) << "speedup" << "equal\n"
      << std::setw(12) << to_string(n) << std::setw(6) << k << std::setw(14)
      << format_ms(r.closed_time) << std::setw(14) << format_ms(r.naive_time) << std::setw(12)
      << speed.str() << "yes\n";
  return kExitOk;
}

template <class F>
std::chrono::duration<double> median_time(std::size_t iters, F&& f) {
  std::vector<std::chrono::duration<double>> times;
  for (std::size_t i = 0; i < iters; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    times.push_back(std::chrono::steady_clock::now() - start);
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
}

void add_cache_option(CLI::App* sub, std::string& cache) {
  sub->add_option("--cache", cache,
                  "Bernoulli cache file, or 'none' to disable persistence "
                  "(default: user config dir bernoulli.cache)");
}

}  // namespace

std::optional<std::filesystem::path> default_cache_path() {
  if (const char* xdg = std::getenv("XDG_CONFIG_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "bernsum" / "bernoulli.cache";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".config" / "bernsum" / "bernoulli.cache";
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B, got '" + text + "'");
  const BigInt a = parse_nonnegative(text.substr(0, dots), "range start");
  const BigInt b = parse_nonnegative(text.substr(dots + 2), "range end");
  if (!a.fits_ulong_p() || !b.fits_ulong_p() || a > b) {
    throw UsageError("invalid range '" + text + "'");
  }
  return {a.get_ui(), b.get_ui()};
}

BenchResult run_bench(const BigInt& n, std::size_t k, std::size_t iters, BernoulliCache& cache) {
  BenchResult r{n, k, {}, {}, false, {}};
  power_sum_closed(n, k, cache);  // warm the cache
  BigInt closed;
  BigInt naive;
  r.closed_time = median_time(iters, [&] { closed = power_sum_closed(n, k, cache); });
  r.naive_time = median_time(iters, [&] { naive = power_sum_naive(n, k); });
  r.values_equal = closed == naive;
  r.value = closed;
  return r;
}

std::vector<SuiteResult> run_verify(std::size_t max_n, std::size_t max_k, std::size_t jobs,
                                    BernoulliCache& cache) {
  std::vector<SuiteResult> suites;
  cache.prefix(max_k + 1);

  // Power-sum grid, one task per k.
  {
    auto grid_for_k = [&](std::size_t k) {
      SuiteResult r;
      for (unsigned long n = 0; n <= max_n; ++n) {
        const auto v = verify_power_sum(BigInt(n), k, cache);
        ++r.total;
        if (v.match) {
          ++r.passed;
        } else if (r.first_failure.empty()) {
          r.first_failure = "S_" + std::to_string(n) + "^" + std::to_string(k) + ": closed " +
                            to_string(v.closed_value) + ", naive " + to_string(v.oracle_value);
        }
      }
      return r;
    };
    std::vector<SuiteResult> per_k(max_k + 1);
    const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, max_k + 1));
    if (workers == 1) {
      for (std::size_t k = 0; k <= max_k; ++k) per_k[k] = grid_for_k(k);
    } else {
      std::vector<std::future<void>> tasks;
      for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
          for (std::size_t k = w; k <= max_k; k += workers) per_k[k] = grid_for_k(k);
        }));
      }
      for (auto& t : tasks) t.get();
    }
    SuiteResult grid;
    grid.name = "power sums (closed = naive)";
    for (const auto& r : per_k) {
      grid.passed += r.passed;
      grid.total += r.total;
      if (grid.first_failure.empty()) grid.first_failure = r.first_failure;
    }
    suites.push_back(std::move(grid));
  }

  auto suite = [&](std::string name, std::size_t from, std::size_t to, std::size_t step,
                   auto&& check) {
    SuiteResult r;
    r.name = std::move(name);
    for (std::size_t i = from; i <= to; i += step) {
      ++r.total;
      std::string failure = check(i);
      if (failure.empty()) {
        ++r.passed;
      } else if (r.first_failure.empty()) {
        r.first_failure = std::move(failure);
      }
    }
    suites.push_back(std::move(r));
  };

  suite("recurrence residual", 1, max_k, 1, [&](std::size_t n) -> std::string {
    const Rational r = recurrence_residual(n, cache);
    return r.is_zero() ? "" : "residual at n = " + std::to_string(n) + " is " + r.str();
  });
  suite("odd-index zeros", 3, max_k, 2, [&](std::size_t n) -> std::string {
    const Rational b = bernoulli(n, cache);
    return b.is_zero() ? "" : "B_" + std::to_string(n) + " = " + b.str();
  });
  suite("telescoping identity", 0, max_k, 1, [&](std::size_t k) -> std::string {
    return telescope_residual(k, cache).is_zero()
               ? ""
               : "P(x+1) - P(x) != (k+1) x^k for k = " + std::to_string(k);
  });
  suite("P(x)/(k+1)+x^k = P(x+1)/(k+1)", 0, max_k, 1, [&](std::size_t k) -> std::string {
    const Polynomial p = p_poly(k, cache);
    const Rational inv(1, static_cast<unsigned long>(k + 1));
    const Polynomial direct = p * inv + Polynomial::monomial(Rational(1), k);
    const Polynomial shifted = compose_shift(p, Rational(1)) * inv;
    return direct == shifted ? "" : "forms differ for k = " + std::to_string(k);
  });
  auto divides = [](const char* label, const DivisibilityReport& r) -> std::string {
    return r.divides ? "" : std::string(label) + " fails for S^" + std::to_string(r.k);
  };
  suite("n(n+1) | S^k", 1, max_k, 1, [&](std::size_t k) {
    return divides("n(n+1)", check_problem2(k, cache));
  });
  suite("n^2(n+1)^2 | S^(2k+1)", 1, max_k >= 3 ? (max_k - 1) / 2 : 0, 1, [&](std::size_t k) {
    return divides("n^2(n+1)^2", check_problem3(k, cache));
  });
  suite("n(n+1)(2n+1) | S^(2k)", 1, max_k / 2, 1, [&](std::size_t k) {
    return divides("n(n+1)(2n+1)", check_problem4(k, cache));
  });
  return suites;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Bernoulli numbers, power-sum polynomials and their checks", "bernsum"};
  app.require_subcommand(1);

  std::string format = "plain";
  std::string cache_opt;
  const std::vector<std::string> formats{"plain", "json", "latex"};

  auto* bern = app.add_subcommand("bernoulli", "Print B_0 .. B_max");
  std::size_t bern_max = 0;
  bern->add_option("--max", bern_max, "Highest index")->required()->check(CLI::NonNegativeNumber);
  bern->add_option("--format", format, "plain, json or latex")->check(CLI::IsMember(formats));
  add_cache_option(bern, cache_opt);

  auto* faul = app.add_subcommand("faulhaber", "Print the power-sum polynomial S_n^k");
  std::optional<std::size_t> faul_k;
  std::string faul_range;
  bool factored = false;
  auto* k_opt = faul->add_option("k", faul_k, "Exponent k")->check(CLI::NonNegativeNumber);
  auto* range_opt = faul->add_option("--range", faul_range, "Inclusive exponent range A..B");
  k_opt->excludes(range_opt);
  faul->add_flag("--factored", factored, "Pull out n, n+1 and 2n+1 factors");
  faul->add_option("--format", format, "plain, json or latex")->check(CLI::IsMember(formats));
  add_cache_option(faul, cache_opt);

  auto* sum = app.add_subcommand("sum", "Print S_n^k = 1^k + ... + n^k");
  std::string sum_n;
  std::size_t sum_k = 0;
  bool naive = false;
  bool closed = false;
  bool check = false;
  bool force = false;
  sum->add_option("n", sum_n, "Upper limit n")->required();
  sum->add_option("k", sum_k, "Exponent k")->required()->check(CLI::NonNegativeNumber);
  auto* f_naive = sum->add_flag("--naive", naive, "Literal summation");
  auto* f_closed = sum->add_flag("--closed", closed, "Closed form (default)");
  auto* f_check = sum->add_flag("--check", check, "Run both and require equality");
  f_naive->excludes(f_closed)->excludes(f_check);
  f_closed->excludes(f_check);
  sum->add_flag("--force", force, "Allow naive summation beyond n = 10^8");
  add_cache_option(sum, cache_opt);

  auto* ver = app.add_subcommand("verify", "Run every self-check");
  std::size_t max_n = 200;
  std::size_t max_k = 30;
  std::size_t jobs = 1;
  ver->add_option("--max-n", max_n, "Largest n in the power-sum grid")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ver->add_option("--max-k", max_k, "Largest exponent")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  ver->add_option("--jobs", jobs, "Worker threads for the grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_cache_option(ver, cache_opt);

  auto* bench = app.add_subcommand("bench", "Time closed form against literal summation");
  std::string bench_n;
  std::size_t bench_k = 0;
  std::size_t iters = 3;
  bench->add_option("--n", bench_n, "Upper limit n (>= 1)")->required();
  bench->add_option("--k", bench_k, "Exponent k")->required()->check(CLI::NonNegativeNumber);
  bench->add_option("--iters", iters, "Timed runs per strategy (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_cache_option(bench, cache_opt);

  std::vector<const char*> argv{"bernsum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    // Validate arguments before touching the cache file.
    BigInt n_value;
    std::pair<std::size_t, std::size_t> range;
    if (*faul) {
      if (!faul_k && faul_range.empty()) throw UsageError("faulhaber needs K or --range A..B");
      range = faul_k ? std::pair{*faul_k, *faul_k} : parse_range(faul_range);
    } else if (*sum) {
      n_value = parse_nonnegative(sum_n, "n");
    } else if (*bench) {
      n_value = parse_nonnegative(bench_n, "--n");
      if (n_value < 1) throw UsageError("--n must be at least 1");
    }

    CacheHandle cache = open_cache(cache_opt);
    int code = kExitOk;
    if (*bern) {
      code = cmd_bernoulli(bern_max, format, *cache.cache, out);
    } else if (*faul) {
      code = cmd_faulhaber(range.first, range.second, factored, format, *cache.cache, out);
    } else if (*sum) {
      const std::string mode = naive ? "naive" : check ? "check" : "closed";
      code = cmd_sum(n_value, sum_k, mode, force, *cache.cache, out, err);
    } else if (*ver) {
      code = cmd_verify(max_n, max_k, jobs, *cache.cache, out, err);
    } else if (*bench) {
      code = cmd_bench(n_value, bench_k, iters, *cache.cache, out, err);
    }
    persist(cache, err);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CacheCorruption& e) {
    err << "error: corrupted cache: " << e.what() << '\n';
    return kExitFailure;
  } catch (const CheckFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace bernsum::cli
