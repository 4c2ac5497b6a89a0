#ifndef BERNSUM_FAULHABER_HPP
#define BERNSUM_FAULHABER_HPP

#include <cstddef>

#include "bernsum/bernoulli.hpp"
#include "bernsum/exact_arith.hpp"
#include "bernsum/polynomial.hpp"

namespace bernsum {

/// P(x) = sum_{i=0}^{k} C(k+1, i) B_i x^(k+1-i).
///
/// Degree k+1, no constant term, and P(x+1) - P(x) = (k+1) x^k.
Polynomial p_poly(std::size_t k, BernoulliCache& cache);

/// The power-sum polynomial S^k(x) with S^k(n) = 1^k + 2^k + ... + n^k.
///
/// Built from P as (P(x) - P(1)) / (k+1) + x^k. For k >= 1 the sum P(1) is
/// the recurrence residual and vanishes, leaving P(x)/(k+1) + x^k; for k = 0
/// it removes the 0^0 term that the telescoped sum picks up, so S^0 = x.
Polynomial faulhaber_poly(std::size_t k, BernoulliCache& cache);

/// Exact p(x) at an integer point.
Rational poly_eval(const Polynomial& p, const BigInt& x);

/// p(x + c).
Polynomial poly_compose_shift(const Polynomial& p, const Rational& c);

/// S_n^k via (P(n+1) - P(1)) / (k+1). Throws std::domain_error for n < 0 and
/// std::logic_error if the division leaves a fraction, which would mean an
/// arithmetic bug rather than bad input.
BigInt power_sum_closed(const BigInt& n, std::size_t k, BernoulliCache& cache);

/// S_n^k by literal summation. Throws std::domain_error for n < 0.
BigInt power_sum_naive(const BigInt& n, std::size_t k);

/// P(x+1) - P(x) - (k+1) x^k, the zero polynomial for every k.
Polynomial telescope_residual(std::size_t k, BernoulliCache& cache);

struct PowerSumVerification {
  BigInt n;
  std::size_t k = 0;
  BigInt closed_value;
  BigInt oracle_value;
  bool match = false;
};

PowerSumVerification verify_power_sum(const BigInt& n, std::size_t k, BernoulliCache& cache);

}  // namespace bernsum

#endif  // BERNSUM_FAULHABER_HPP
