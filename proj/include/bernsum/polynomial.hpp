#ifndef BERNSUM_POLYNOMIAL_HPP
#define BERNSUM_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bernsum/exact_arith.hpp"

namespace bernsum {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// in ascending powers with no trailing zeros; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  /// Ascending coefficients: {c0, c1, c2} is c0 + c1 x + c2 x^2.
  Polynomial(std::initializer_list<Rational> ascending);

  static Polynomial monomial(const Rational& coeff, std::size_t power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Precondition: not the zero polynomial.
  const Rational& leading() const { return coeffs_.back(); }
  /// Zero for powers above the degree.
  Rational coefficient(std::size_t power) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact value at x, Horner order.
Rational evaluate(const Polynomial& p, const Rational& x);

/// Coefficients of p(x + c).
Polynomial compose_shift(const Polynomial& p, const Rational& c);

/// p(x) written as (1/denominator) * sum coeffs[i] x^i with integer
/// coefficients; denominator is the lcm of the coefficient denominators
/// (1 for the zero polynomial). coeffs is ascending.
struct IntegerForm {
  BigInt denominator;
  std::vector<BigInt> coeffs;
};
IntegerForm integer_form(const Polynomial& p);

}  // namespace bernsum

#endif  // BERNSUM_POLYNOMIAL_HPP
