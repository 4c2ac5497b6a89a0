#include "bernsum/analysis.hpp"

#include <stdexcept>
#include <string>

#include "bernsum/faulhaber.hpp"

namespace bernsum {

DivMod poly_divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial{}, dividend};

  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const auto dv = divisor.coefficients();
  const Rational& lead = divisor.leading();
  for (int top = dividend.degree(); top >= dd; --top) {
    const Rational& r = rem[static_cast<std::size_t>(top)];
    if (r.is_zero()) continue;
    const Rational q = r / lead;
    const auto shift = static_cast<std::size_t>(top - dd);
    quot[shift] = q;
    for (std::size_t j = 0; j < dv.size(); ++j) rem[shift + j] -= q * dv[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

DivisibilityReport check_divisibility(std::size_t k, const Polynomial& divisor,
                                      BernoulliCache& cache) {
  const Polynomial s = faulhaber_poly(k, cache);
  auto [q, r] = poly_divmod(s, divisor);
  DivisibilityReport report{k, divisor, r.is_zero(), std::move(q), std::move(r)};
  if (report.divides && divisor * report.quotient != s) {
    throw std::logic_error("divisor * quotient does not re-expand to S^" + std::to_string(k));
  }
  return report;
}

Polynomial n_np1() { return Polynomial{0, 1, 1}; }

Polynomial n_np1_squared() { return n_np1() * n_np1(); }

Polynomial n_np1_2np1() { return n_np1() * Polynomial{1, 2}; }

DivisibilityReport check_problem2(std::size_t k, BernoulliCache& cache) {
  if (k == 0) {
    throw std::domain_error("x(x+1) | S^k needs k >= 1: S^0 = n is not divisible by n(n+1)");
  }
  return check_divisibility(k, n_np1(), cache);
}

DivisibilityReport check_problem3(std::size_t k, BernoulliCache& cache) {
  if (k == 0) {
    throw std::domain_error(
        "x^2(x+1)^2 | S^(2k+1) needs k >= 1: S^1 = n(n+1)/2 is not divisible by n^2(n+1)^2");
  }
  return check_divisibility(2 * k + 1, n_np1_squared(), cache);
}

DivisibilityReport check_problem4(std::size_t k, BernoulliCache& cache) {
  if (k == 0) {
    throw std::domain_error(
        "x(x+1)(2x+1) | S^(2k) needs k >= 1: S^0 = n is not divisible by n(n+1)(2n+1)");
  }
  return check_divisibility(2 * k, n_np1_2np1(), cache);
}

bool value_divisibility(const BigInt& n, std::size_t k, const Polynomial& modulus,
                        BernoulliCache& cache) {
  if (n < 1) throw std::domain_error("value divisibility needs n >= 1");
  const Rational m = poly_eval(modulus, n);
  if (m.is_zero()) throw std::domain_error("modulus evaluates to 0 at n = " + to_string(n));
  if (!m.is_integer()) {
    throw std::domain_error("modulus evaluates to non-integer " + m.str() + " at n = " + to_string(n));
  }
  const BigInt s = power_sum_closed(n, k, cache);
  return mpz_divisible_p(s.get_mpz_t(), m.num().get_mpz_t()) != 0;
}

std::pair<Rational, Polynomial> content_and_primitive(const Polynomial& p) {
  const IntegerForm form = integer_form(p);
  BigInt g = 0;
  for (const auto& c : form.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.leading().sign() < 0) g = -g;
  Rational content(g, form.denominator);
  std::vector<Rational> prim;
  prim.reserve(form.coeffs.size());
  for (const auto& c : form.coeffs) prim.emplace_back(BigInt(c / g));
  return {std::move(content), Polynomial(std::move(prim))};
}

Polynomial FactoredForm::expand() const {
  Polynomial out{scalar};
  for (const auto& f : factors) {
    for (std::size_t i = 0; i < f.multiplicity; ++i) out = out * f.poly;
  }
  return out;
}

FactoredForm factored_form(std::size_t k, BernoulliCache& cache) {
  const Polynomial s = faulhaber_poly(k, cache);
  auto [scalar, rest] = content_and_primitive(s);
  FactoredForm form{k, std::move(scalar), {}};

  for (const Polynomial& linear : {Polynomial{0, 1}, Polynomial{1, 1}, Polynomial{1, 2}}) {
    std::size_t mult = 0;
    while (rest.degree() >= 1) {
      auto [q, r] = poly_divmod(rest, linear);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) form.factors.push_back({linear, mult});
  }
  if (rest.degree() >= 1) {
    auto [c, prim] = content_and_primitive(rest);
    form.scalar *= c;
    form.factors.push_back({std::move(prim), 1});
  } else {
    form.scalar *= rest.leading();
  }

  if (form.expand() != s) {
    throw std::logic_error("factored form does not re-expand to S^" + std::to_string(k));
  }
  return form;
}

}  // namespace bernsum
