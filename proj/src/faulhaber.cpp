#include "bernsum/faulhaber.hpp"

#include <stdexcept>
#include <string>

namespace bernsum {

Polynomial p_poly(std::size_t k, BernoulliCache& cache) {
  const auto b = cache.prefix(k);
  std::vector<Rational> coeffs(k + 2);
  for (std::size_t i = 0; i <= k; ++i) {
    coeffs[k + 1 - i] = Rational(binomial(k + 1, i)) * b[i];
  }
  return Polynomial(std::move(coeffs));
}

Polynomial faulhaber_poly(std::size_t k, BernoulliCache& cache) {
  const Polynomial p = p_poly(k, cache);
  const Rational p_at_one = evaluate(p, Rational(1));
  Polynomial s = (p - Polynomial{p_at_one}) * Rational(1, static_cast<unsigned long>(k + 1));
  return s + Polynomial::monomial(Rational(1), k);
}

Rational poly_eval(const Polynomial& p, const BigInt& x) { return evaluate(p, Rational(x)); }

Polynomial poly_compose_shift(const Polynomial& p, const Rational& c) { return compose_shift(p, c); }

BigInt power_sum_closed(const BigInt& n, std::size_t k, BernoulliCache& cache) {
  if (sgn(n) < 0) throw std::domain_error("power sum needs n >= 0");
  const Polynomial p = p_poly(k, cache);
  const Rational value =
      (poly_eval(p, BigInt(n + 1)) - evaluate(p, Rational(1))) /
      Rational(static_cast<long>(k + 1));
  if (!value.is_integer()) {
    throw std::logic_error("closed-form power sum S_" + to_string(n) + "^" + std::to_string(k) +
                           " came out as " + value.str());
  }
  return value.num();
}

BigInt power_sum_naive(const BigInt& n, std::size_t k) {
  if (sgn(n) < 0) throw std::domain_error("power sum needs n >= 0");
  BigInt sum = 0;
  BigInt term;
  if (n.fits_ulong_p()) {
    const unsigned long last = n.get_ui();
    for (unsigned long i = 1; i <= last; ++i) {
      mpz_ui_pow_ui(term.get_mpz_t(), i, k);
      sum += term;
    }
    return sum;
  }
  for (BigInt i = 1; i <= n; ++i) {
    mpz_pow_ui(term.get_mpz_t(), i.get_mpz_t(), k);
    sum += term;
  }
  return sum;
}

Polynomial telescope_residual(std::size_t k, BernoulliCache& cache) {
  const Polynomial p = p_poly(k, cache);
  return compose_shift(p, Rational(1)) - p -
         Polynomial::monomial(Rational(static_cast<long>(k + 1)), k);
}

PowerSumVerification verify_power_sum(const BigInt& n, std::size_t k, BernoulliCache& cache) {
  PowerSumVerification v{n, k, power_sum_closed(n, k, cache), power_sum_naive(n, k), false};
  v.match = v.closed_value == v.oracle_value;
  return v;
}

}  // namespace bernsum
