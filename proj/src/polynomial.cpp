#include "bernsum/polynomial.hpp"

#include <algorithm>

namespace bernsum {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial compose_shift(const Polynomial& p, const Rational& c) {
  if (c.is_zero() || p.is_zero()) return p;
  const auto a = p.coefficients();
  std::vector<Rational> out(a.size());
  // a_j (x + c)^j = a_j sum_m C(j, m) c^(j-m) x^m
  std::vector<Rational> c_pow{Rational(1)};
  for (std::size_t j = 1; j < a.size(); ++j) c_pow.push_back(c_pow.back() * c);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t m = 0; m <= j; ++m) {
      out[m] += a[j] * Rational(binomial(j, m)) * c_pow[j - m];
    }
  }
  return Polynomial(std::move(out));
}

IntegerForm integer_form(const Polynomial& p) {
  IntegerForm form{BigInt(1), {}};
  for (const auto& c : p.coefficients()) form.denominator = lcm(form.denominator, c.den());
  form.coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    form.coeffs.push_back(c.num() * (form.denominator / c.den()));
  }
  return form;
}

}  // namespace bernsum
