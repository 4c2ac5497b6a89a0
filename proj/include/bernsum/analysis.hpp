#ifndef BERNSUM_ANALYSIS_HPP
#define BERNSUM_ANALYSIS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bernsum/bernoulli.hpp"
#include "bernsum/polynomial.hpp"

namespace bernsum {

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division over Q: dividend = divisor * quotient + remainder with
/// deg(remainder) < deg(divisor). Throws std::domain_error on a zero divisor.
DivMod poly_divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Outcome of dividing S^k by a fixed divisor. k is the exponent of the
/// power sum that was divided.
struct DivisibilityReport {
  std::size_t k = 0;
  Polynomial divisor;
  bool divides = false;
  Polynomial quotient;
  Polynomial remainder;
};

/// Divides faulhaber_poly(k) by divisor; when the remainder vanishes the
/// product divisor * quotient is re-expanded and compared against S^k.
DivisibilityReport check_divisibility(std::size_t k, const Polynomial& divisor,
                                      BernoulliCache& cache);

// The three structural divisors.
Polynomial n_np1();           // x(x+1)
Polynomial n_np1_squared();   // x^2(x+1)^2
Polynomial n_np1_2np1();      // x(x+1)(2x+1)

/// x(x+1) | S^k. Requires k >= 1.
DivisibilityReport check_problem2(std::size_t k, BernoulliCache& cache);
/// x^2(x+1)^2 | S^(2k+1). Requires k >= 1.
DivisibilityReport check_problem3(std::size_t k, BernoulliCache& cache);
/// x(x+1)(2x+1) | S^(2k). Requires k >= 1.
DivisibilityReport check_problem4(std::size_t k, BernoulliCache& cache);

/// Whether the integer modulus(n) divides the integer S_n^k. Throws
/// std::domain_error for n < 1 or when modulus(n) is zero or not an integer.
bool value_divisibility(const BigInt& n, std::size_t k, const Polynomial& modulus,
                        BernoulliCache& cache);

struct Factor {
  Polynomial poly;
  std::size_t multiplicity = 1;
};

/// S^k = scalar * prod factor^multiplicity, factors ordered x, x+1, 2x+1,
/// then the leftover cofactor (omitted when it is 1). Every factor is a
/// primitive integer polynomial with positive leading coefficient.
struct FactoredForm {
  std::size_t k = 0;
  Rational scalar;
  std::vector<Factor> factors;

  Polynomial expand() const;
};

FactoredForm factored_form(std::size_t k, BernoulliCache& cache);

/// Splits p into content * primitive part, where the primitive part has
/// integer coefficients with gcd 1 and a positive leading coefficient.
/// Precondition: p is not zero.
std::pair<Rational, Polynomial> content_and_primitive(const Polynomial& p);

}  // namespace bernsum

#endif  // BERNSUM_ANALYSIS_HPP
