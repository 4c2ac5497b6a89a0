#ifndef BERNSUM_FORMAT_HPP
#define BERNSUM_FORMAT_HPP

#include <cstddef>
#include <span>
#include <string>

#include "json.hpp"

#include "bernsum/analysis.hpp"
#include "bernsum/exact_arith.hpp"
#include "bernsum/polynomial.hpp"

namespace bernsum {

using Json = nlohmann::ordered_json;

enum class Style { plain, latex };

// Text rendering in the conventional typeset layout, e.g.
//   S_n^6 = 1/42 n(n+1)(2n+1)(3n^4 + 6n^3 - 3n + 1)
// Integers print bare; other rationals as a/b (plain) or \frac{a}{b}.

std::string render_rational(const Rational& r, Style style);
std::string render_bernoulli(std::size_t n, const Rational& value, Style style);
/// "6n^11 + 33n^10 - 66n^7 + 5n"; zero renders as "0".
std::string render_integer_poly(std::span<const BigInt> ascending, Style style);
/// Non-constant polynomials render as "1/d (...)" with integer coefficients
/// inside; constants render as a rational.
std::string render_poly(const Polynomial& p, Style style);
std::string render_power_sum(std::size_t k, const Polynomial& s, Style style);
std::string render_factored(const FactoredForm& form, Style style);

// JSON. Polynomials are {"denominator": "<d>", "coeffs": [highest .. constant]}
// with integer coefficient strings; power sums prepend "k".

Json poly_to_json(const Polynomial& p);
Json power_sum_to_json(std::size_t k, const Polynomial& s);
/// Inverse of poly_to_json (extra keys such as "k" are ignored).
/// Throws std::invalid_argument on malformed input.
Polynomial poly_from_json(const Json& j);
Json report_to_json(const DivisibilityReport& report);
Json factored_to_json(const FactoredForm& form);
/// [{"n": 0, "value": "1/1"}, ...]
Json bernoulli_to_json(std::span<const Rational> values);

}  // namespace bernsum

#endif  // BERNSUM_FORMAT_HPP
