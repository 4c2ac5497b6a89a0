#include "bernsum/format.hpp"

#include <stdexcept>

namespace bernsum {

namespace {

std::string exponent(std::size_t e, Style style) {
  return style == Style::latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

std::string monomial_body(const BigInt& abs_coeff, std::size_t power, Style style) {
  if (power == 0) return to_string(abs_coeff);
  std::string out = abs_coeff == 1 ? "" : to_string(abs_coeff);
  out += "n";
  if (power > 1) out += exponent(power, style);
  return out;
}

std::string render_factor(const Factor& f, Style style) {
  std::string out;
  if (f.poly == Polynomial{0, 1}) {
    out = "n";
  } else {
    std::vector<BigInt> c;
    for (const auto& r : f.poly.coefficients()) c.push_back(r.num());
    std::string body = render_integer_poly(c, style);
    // Linear factors print tight: (2n+1), not (2n + 1).
    if (f.poly.degree() == 1) std::erase(body, ' ');
    out = "(" + body + ")";
  }
  if (f.multiplicity > 1) out += exponent(f.multiplicity, style);
  return out;
}

std::string power_sum_lhs(std::size_t k, Style style) {
  return style == Style::latex ? "S_n^{" + std::to_string(k) + "} = "
                               : "S_n^" + std::to_string(k) + " = ";
}

}  // namespace

std::string render_rational(const Rational& r, Style style) {
  if (r.is_integer()) return to_string(r.num());
  if (style == Style::plain) return to_string(r.num()) + "/" + to_string(r.den());
  const BigInt mag = abs(r.num());
  return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + to_string(mag) + "}{" +
         to_string(r.den()) + "}";
}

std::string render_bernoulli(std::size_t n, const Rational& value, Style style) {
  const std::string idx = style == Style::latex ? "{" + std::to_string(n) + "}" : std::to_string(n);
  return "B_" + idx + " = " + render_rational(value, style);
}

std::string render_integer_poly(std::span<const BigInt> ascending, Style style) {
  std::string out;
  for (std::size_t i = ascending.size(); i-- > 0;) {
    const BigInt& c = ascending[i];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += monomial_body(abs(c), i, style);
  }
  return out.empty() ? "0" : out;
}

std::string render_poly(const Polynomial& p, Style style) {
  if (p.degree() <= 0) return render_rational(p.coefficient(0), style);
  const IntegerForm form = integer_form(p);
  const std::string body = render_integer_poly(form.coeffs, style);
  if (form.denominator == 1) return body;
  if (style == Style::latex) {
    return "\\frac{1}{" + to_string(form.denominator) + "} \\left(" + body + "\\right)";
  }
  return "1/" + to_string(form.denominator) + " (" + body + ")";
}

std::string render_power_sum(std::size_t k, const Polynomial& s, Style style) {
  return power_sum_lhs(k, style) + render_poly(s, style);
}

std::string render_factored(const FactoredForm& form, Style style) {
  std::string out = power_sum_lhs(form.k, style);
  if (form.factors.empty()) return out + render_rational(form.scalar, style);
  if (form.scalar != Rational(1)) out += render_rational(form.scalar, style) + " ";
  for (const auto& f : form.factors) out += render_factor(f, style);
  return out;
}

Json poly_to_json(const Polynomial& p) {
  const IntegerForm form = integer_form(p);
  Json coeffs = Json::array();
  for (auto it = form.coeffs.rbegin(); it != form.coeffs.rend(); ++it) coeffs.push_back(to_string(*it));
  return Json{{"denominator", to_string(form.denominator)}, {"coeffs", std::move(coeffs)}};
}

Json power_sum_to_json(std::size_t k, const Polynomial& s) {
  Json j = Json::object();
  j["k"] = k;
  const Json poly = poly_to_json(s);
  for (const auto& [key, value] : poly.items()) j[key] = value;
  return j;
}

Polynomial poly_from_json(const Json& j) {
  try {
    const BigInt den = parse_bigint(j.at("denominator").get<std::string>());
    if (sgn(den) <= 0) throw std::invalid_argument("denominator must be positive");
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw std::invalid_argument("coeffs must be an array");
    std::vector<Rational> ascending;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      ascending.emplace_back(parse_bigint(it->get<std::string>()), den);
    }
    return Polynomial(std::move(ascending));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json report_to_json(const DivisibilityReport& report) {
  return Json{{"k", report.k},
              {"divisor", poly_to_json(report.divisor)},
              {"divides", report.divides},
              {"quotient", poly_to_json(report.quotient)},
              {"remainder", poly_to_json(report.remainder)}};
}

Json factored_to_json(const FactoredForm& form) {
  Json factors = Json::array();
  for (const auto& f : form.factors) {
    factors.push_back(Json{{"factor", poly_to_json(f.poly)}, {"multiplicity", f.multiplicity}});
  }
  return Json{{"k", form.k}, {"scalar", form.scalar.str()}, {"factors", std::move(factors)}};
}

Json bernoulli_to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back(Json{{"n", i}, {"value", values[i].str()}});
  }
  return out;
}

}  // namespace bernsum
