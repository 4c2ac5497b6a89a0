#include "doctest.h"

#include "bernsum/faulhaber.hpp"
#include "bernsum/format.hpp"

using bernsum::BernoulliCache;
using bernsum::BigInt;
using bernsum::Json;
using bernsum::Polynomial;
using bernsum::Rational;
using bernsum::Style;

TEST_CASE("rationals and Bernoulli lines") {
  CHECK(bernsum::render_rational(Rational::parse("-1/30"), Style::plain) == "-1/30");
  CHECK(bernsum::render_rational(Rational(0), Style::plain) == "0");
  CHECK(bernsum::render_rational(Rational::parse("-1/2"), Style::latex) == "-\\frac{1}{2}");
  CHECK(bernsum::render_bernoulli(4, Rational::parse("-1/30"), Style::plain) == "B_4 = -1/30");
  CHECK(bernsum::render_bernoulli(22, Rational::parse("854513/138"), Style::latex) ==
        "B_{22} = \\frac{854513}{138}");
  CHECK(bernsum::render_bernoulli(0, Rational(1), Style::latex) == "B_{0} = 1");
}

TEST_CASE("polynomial text") {
  const std::vector<BigInt> c{1, -3, 0, 6, 3};
  CHECK(bernsum::render_integer_poly(c, Style::plain) == "3n^4 + 6n^3 - 3n + 1");
  CHECK(bernsum::render_integer_poly(c, Style::latex) == "3n^{4} + 6n^{3} - 3n + 1");
  const std::vector<BigInt> neg{0, -1, 0, -1};
  CHECK(bernsum::render_integer_poly(neg, Style::plain) == "-n^3 - n");
  CHECK(bernsum::render_integer_poly(std::vector<BigInt>{}, Style::plain) == "0");
  CHECK(bernsum::render_poly(Polynomial{Rational::parse("1/2")}, Style::plain) == "1/2");
}

TEST_CASE("power sums, expanded and factored") {
  BernoulliCache cache;
  CHECK(bernsum::render_power_sum(0, bernsum::faulhaber_poly(0, cache), Style::plain) == "S_n^0 = n");
  CHECK(bernsum::render_power_sum(10, bernsum::faulhaber_poly(10, cache), Style::plain) ==
        "S_n^10 = 1/66 (6n^11 + 33n^10 + 55n^9 - 66n^7 + 66n^5 - 33n^3 + 5n)");
  CHECK(bernsum::render_power_sum(2, bernsum::faulhaber_poly(2, cache), Style::latex) ==
        "S_n^{2} = \\frac{1}{6} \\left(2n^{3} + 3n^{2} + n\\right)");

  auto factored = [&](std::size_t k, Style s = Style::plain) {
    return bernsum::render_factored(bernsum::factored_form(k, cache), s);
  };
  CHECK(factored(0) == "S_n^0 = n");
  CHECK(factored(1) == "S_n^1 = 1/2 n(n+1)");
  CHECK(factored(3) == "S_n^3 = 1/4 n^2(n+1)^2");
  CHECK(factored(4) == "S_n^4 = 1/30 n(n+1)(2n+1)(3n^2 + 3n - 1)");
  CHECK(factored(6) == "S_n^6 = 1/42 n(n+1)(2n+1)(3n^4 + 6n^3 - 3n + 1)");
  CHECK(factored(7) == "S_n^7 = 1/24 n^2(n+1)^2(3n^4 + 6n^3 - n^2 - 4n + 2)");
  CHECK(factored(3, Style::latex) == "S_n^{3} = \\frac{1}{4} n^{2}(n+1)^{2}");
}

TEST_CASE("JSON forms") {
  BernoulliCache cache;
  CHECK(bernsum::bernoulli_to_json(std::vector{Rational(1)}).dump() == R"([{"n":0,"value":"1/1"}])");

  const Json s3 = bernsum::power_sum_to_json(3, bernsum::faulhaber_poly(3, cache));
  CHECK(s3.dump() == R"({"k":3,"denominator":"4","coeffs":["1","2","1","0","0"]})");

  const Json s10 = bernsum::power_sum_to_json(10, bernsum::faulhaber_poly(10, cache));
  CHECK(s10["denominator"] == "66");
  CHECK(s10["coeffs"].size() == 12);
  CHECK(s10["coeffs"][0] == "6");

  CHECK(bernsum::poly_to_json(Polynomial{}).dump() == R"({"denominator":"1","coeffs":[]})");

  const auto report = bernsum::check_problem2(2, cache);
  const Json r = bernsum::report_to_json(report);
  CHECK(r["k"] == 2);
  CHECK(r["divides"] == true);
  CHECK(bernsum::poly_from_json(r["quotient"]) == report.quotient);
  CHECK(bernsum::poly_from_json(r["divisor"]) == bernsum::n_np1());
  CHECK(bernsum::poly_from_json(r["remainder"]).is_zero());

  const Json f = bernsum::factored_to_json(bernsum::factored_form(6, cache));
  CHECK(f["scalar"] == "1/42");
  CHECK(f["factors"].size() == 4);
}

TEST_CASE("power-sum JSON round-trips for every k <= 30") {
  BernoulliCache cache;
  for (std::size_t k = 0; k <= 30; ++k) {
    const Polynomial s = bernsum::faulhaber_poly(k, cache);
    const Json j = Json::parse(bernsum::power_sum_to_json(k, s).dump());
    CHECK(j["k"] == k);
    CHECK(bernsum::poly_from_json(j) == s);
  }
}

TEST_CASE("malformed polynomial JSON") {
  CHECK_THROWS_AS(bernsum::poly_from_json(Json::parse(R"({"coeffs":["1"]})")), std::invalid_argument);
  CHECK_THROWS_AS(bernsum::poly_from_json(Json::parse(R"({"denominator":"0","coeffs":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(bernsum::poly_from_json(Json::parse(R"({"denominator":"2","coeffs":[1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(bernsum::poly_from_json(Json::parse(R"({"denominator":"2","coeffs":"x"})")),
                  std::invalid_argument);
}
