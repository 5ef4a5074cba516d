// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "cyclomat/polyseries.hpp"

using namespace cyclomat;

namespace {

MultivariatePolynomial var(std::size_t n, std::size_t i) {
  return MultivariatePolynomial::variable(n, i);
}

TruncatedBivariateSeries<Rational> random_series(std::mt19937_64& rng,
                                                 std::size_t o1, std::size_t o2,
                                                 bool constant_one) {
  std::uniform_int_distribution<int> dist(-5, 5);
  TruncatedBivariateSeries<Rational> s(o1, o2);
  for (std::size_t a = 0; a <= o1; ++a)
    for (std::size_t b = 0; b <= o2; ++b)
      s.at(a, b) = make_rational(dist(rng), 1 + rng() % 4);
  s.at(0, 0) = constant_one ? 1 : 0;
  return s;
}

}  // namespace

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("Tutte polynomial container") {
  TuttePolynomial t;
  t.add_term(1, 0, 2);
  t.add_term(0, 1, 1);
  t.add_term(0, 1, -1);
  CHECK(t.coefficient(0, 1) == 0);
  CHECK(t.terms().size() == 1);
  t.add_term(0, 2, 3);
  CHECK(t.to_string() == "3*y^2 + 2*x");
  CHECK(t.swapped().to_string() == "2*y + 3*x^2");
  CHECK(t.evaluate(2, 1) == 7);
  CHECK(t.has_nonnegative_coefficients());
  CHECK((TuttePolynomial::x() * TuttePolynomial::y()).coefficient(1, 1) == 1);
  CHECK(TuttePolynomial::constant(0).to_string() == "0");
}

TEST_CASE("canonical text of multivariate polynomials") {
  const auto x1 = var(2, 0), x2 = var(2, 1);
  const MultivariatePolynomial one(2, 1);
  const auto p = one + x1 * Rational(2) + x1 * x1 * x2;
  CHECK(p.to_string() == "1 + 2*x1 + x1^2*x2");
  CHECK((x1 - x2 * Rational(3)).to_string() == "-3*x2 + x1");
  CHECK((x1 * make_rational(1, 2)).to_string({"q", "t"}) == "1/2*q");
  CHECK(MultivariatePolynomial(2).to_string() == "0");
}

TEST_CASE("multivariate arithmetic, specialization and composition") {
  const auto x = var(2, 0), y = var(2, 1);
  const MultivariatePolynomial one(2, 1);
  const auto p = (x + y + one).pow(3);
  CHECK(p.total_degree() == 3);
  CHECK(p.coefficient({1, 1}) == 6);
  CHECK(p.evaluate({Rational(1), Rational(2)}) == 64);
  CHECK(p.is_symmetric());
  CHECK(!(x + y * Rational(2)).is_symmetric());
  CHECK(p.has_integer_coefficients());
  CHECK(!(x * make_rational(1, 3)).has_integer_coefficients());

  const auto s = p.specialize(1, Rational(0));
  CHECK(s.variable_count() == 1);
  CHECK(s == (var(1, 0) + MultivariatePolynomial(1, 1)).pow(3));

  // x -> u + 1, y -> u - 1 in one variable u.
  const auto u = var(1, 0);
  const MultivariatePolynomial c1(1, 1);
  const auto composed = (x * y).compose({u + c1, u - c1});
  CHECK(composed == u * u - c1);

  CHECK_THROWS_AS(x + var(3, 0), std::invalid_argument);
}

TEST_CASE("exact multivariate division") {
  const auto x = var(3, 0), y = var(3, 1), z = var(3, 2);
  const MultivariatePolynomial one(3, 1);
  const auto s = one + x + y + z;
  const auto q = x * y + z * z * Rational(3) - one;
  const auto product = s.pow(2) * q;
  const auto back = poly_divide_exact(product, s.pow(2));
  REQUIRE(back.has_value());
  CHECK(*back == q);
  CHECK(!poly_divide_exact(product + x, s).has_value());
  CHECK_THROWS_AS(poly_divide_exact(s, MultivariatePolynomial(3)), std::domain_error);
  CHECK(poly_divide_exact(MultivariatePolynomial(3), s)->is_zero());
}

TEST_CASE("Laurent polynomials") {
  const auto y = LaurentPolynomial::monomial(1);
  const LaurentPolynomial p = (y + LaurentPolynomial(1)).pow(2) *
                              LaurentPolynomial::monomial(-1);
  CHECK(p.min_exponent() == -1);
  CHECK(p.max_exponent() == 1);
  CHECK(p.to_string() == "y^-1 + 2 + y");
  CHECK(!p.is_integral_polynomial());
  CHECK((p * y).is_integral_polynomial());
  CHECK(p.evaluate(2) == make_rational(9, 2));
  CHECK((y * y + y * Rational(6) + LaurentPolynomial(12)).to_string() ==
        "12 + 6*y + y^2");
  CHECK((p - p).is_zero());
  CHECK(LaurentPolynomial().to_string() == "0");
}

TEST_CASE("series multiplication is the binomial convolution") {
  // e^{x1} e^{x1} = e^{2 x1}: coefficients 2^m1 at (m1, 0).
  TruncatedBivariateSeries<Rational> e(5, 2);
  for (std::size_t a = 0; a <= 5; ++a) e.at(a, 0) = 1;
  const auto sq = series_mul(e, e);
  for (std::size_t a = 0; a <= 5; ++a) {
    CHECK(sq.at(a, 0) == Rational(1 << a));
    CHECK(sq.at(a, 1) == 0);
  }
  std::mt19937_64 rng(3);
  const auto a = random_series(rng, 3, 4, false), b = random_series(rng, 3, 4, true);
  CHECK(series_mul(a, b) == series_mul(b, a));
  CHECK(series_int_pow(b, 3) == series_mul(b, series_mul(b, b)));
  CHECK(series_int_pow(b, 0) == TruncatedBivariateSeries<Rational>::one(3, 4));
  CHECK_THROWS_AS(series_mul(a, random_series(rng, 4, 3, true)),
                  std::invalid_argument);
}

TEST_CASE("series log and exp are inverse at orders (4,4)") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const auto s = random_series(rng, 4, 4, false);
    CHECK(series_log(series_exp(s)) == s);
    const auto u = random_series(rng, 4, 4, true);
    CHECK(series_exp(series_log(u)) == u);
  }
  const auto bad = random_series(rng, 2, 2, false);
  CHECK_THROWS_AS(series_log(bad), std::domain_error);
  CHECK_THROWS_AS(series_exp(random_series(rng, 2, 2, true)), std::domain_error);
}

TEST_CASE("series over Laurent coefficients") {
  // log of sum_{m} t^m x1^m / m! is t x1 exactly.
  TruncatedBivariateSeries<LaurentPolynomial> s(4, 0);
  for (std::size_t m = 0; m <= 4; ++m)
    s.at(m, 0) = LaurentPolynomial::monomial(static_cast<int>(m));
  const auto l = series_log(s);
  CHECK(l.at(1, 0) == LaurentPolynomial::monomial(1));
  for (std::size_t m = 2; m <= 4; ++m) CHECK(l.at(m, 0).is_zero());
}
