#ifndef BERNSUM_EXACT_ARITH_HPP
#define BERNSUM_EXACT_ARITH_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bernsum {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// on anything else (no whitespace, no leading '+').
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Equality is therefore structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}
  Rational(const BigInt& value) : num_(value), den_(1) {}
  /// Throws std::domain_error when den is zero.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Canonical "<num>/<den>" form, e.g. "-691/2730" or "1/1".
  std::string str() const;
  /// Accepts "<num>/<den>" or a bare integer; the result is reduced.
  static Rational parse(std::string_view text);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, k) computed with the multiplicative formula and exact division at
/// every step. Returns 0 for k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace bernsum

#endif  // BERNSUM_EXACT_ARITH_HPP
