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

#ifndef CYCLOMAT_POLYSERIES_HPP
#define CYCLOMAT_POLYSERIES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclomat/exact_linalg.hpp"

namespace cyclomat {

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

// T(x, y) with integer coefficients, keyed by (deg_x, deg_y).
class TuttePolynomial {
 public:
  using Key = std::pair<unsigned, unsigned>;

  TuttePolynomial() = default;
  static TuttePolynomial constant(const BigInt& c);
  static TuttePolynomial x();
  static TuttePolynomial y();

  void add_term(unsigned i, unsigned j, const BigInt& c);
  BigInt coefficient(unsigned i, unsigned j) const;
  const std::map<Key, BigInt>& terms() const noexcept { return terms_; }

  Rational evaluate(const Rational& x, const Rational& y) const;
  // T(y, x).
  TuttePolynomial swapped() const;
  bool has_nonnegative_coefficients() const;

  // Canonical text, terms ascending lexicographically in (i, j).
  std::string to_string() const;

  friend TuttePolynomial operator*(const TuttePolynomial& a,
                                   const TuttePolynomial& b);
  friend bool operator==(const TuttePolynomial&,
                         const TuttePolynomial&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

class MultivariatePolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultivariatePolynomial(std::size_t variable_count = 0);
  MultivariatePolynomial(std::size_t variable_count, const Rational& constant);
  static MultivariatePolynomial variable(std::size_t variable_count,
                                         std::size_t index);

  std::size_t variable_count() const noexcept { return variable_count_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  Rational coefficient(const Exponents& e) const;

  unsigned total_degree() const;
  bool has_integer_coefficients() const;
  // Invariant under every permutation of the variables.
  bool is_symmetric() const;

  Rational evaluate(const std::vector<Rational>& point) const;
  // Fixes one variable to a value and drops it.
  MultivariatePolynomial specialize(std::size_t index,
                                    const Rational& value) const;
  // Replaces every variable by a polynomial in a (possibly different) ring.
  MultivariatePolynomial compose(
      const std::vector<MultivariatePolynomial>& images) const;

  MultivariatePolynomial pow(unsigned k) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  MultivariatePolynomial& operator+=(const MultivariatePolynomial& o);
  MultivariatePolynomial& operator-=(const MultivariatePolynomial& o);
  friend MultivariatePolynomial operator+(MultivariatePolynomial a,
                                          const MultivariatePolynomial& b) {
    return a += b;
  }
  friend MultivariatePolynomial operator-(MultivariatePolynomial a,
                                          const MultivariatePolynomial& b) {
    return a -= b;
  }
  friend MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                          const MultivariatePolynomial& b);
  friend MultivariatePolynomial operator*(MultivariatePolynomial a,
                                          const Rational& s);
  friend bool operator==(const MultivariatePolynomial&,
                         const MultivariatePolynomial&) = default;

 private:
  void check_compatible(const MultivariatePolynomial& o) const;

  std::size_t variable_count_;
  std::map<Exponents, Rational> terms_;
};

// Returns q with a = b * q, or nullopt when b does not divide a.
// Throws std::domain_error when b is zero.
std::optional<MultivariatePolynomial> poly_divide_exact(
    const MultivariatePolynomial& a, const MultivariatePolynomial& b);

// Univariate polynomial allowing negative exponents.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(long constant) : LaurentPolynomial(Rational(constant)) {}
  static LaurentPolynomial monomial(int exponent, const Rational& c = 1);

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(int exponent, const Rational& c);
  Rational coefficient(int exponent) const;

  int min_exponent() const;
  int max_exponent() const;
  // No negative exponents and all coefficients integral.
  bool is_integral_polynomial() const;

  Rational evaluate(const Rational& at) const;
  LaurentPolynomial pow(unsigned k) const;

  // Canonical text, ascending exponents, e.g. "12 + 6*y + y^2".
  std::string to_string(std::string_view variable = "y") const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& s);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) {
    return a *= s;
  }
  friend bool operator==(const LaurentPolynomial&,
                         const LaurentPolynomial&) = default;

 private:
  std::map<int, Rational> terms_;
};

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const LaurentPolynomial& p) { return p.is_zero(); }

// Truncated series in z1, z2 with EGF normalisation: the stored coefficient
// at (m1, m2) multiplies z1^m1 z2^m2 / (m1! m2!).
template <class Ring>
class TruncatedBivariateSeries {
 public:
  TruncatedBivariateSeries(std::size_t order1, std::size_t order2)
      : order1_(order1),
        order2_(order2),
        coeffs_((order1 + 1) * (order2 + 1)) {}

  static TruncatedBivariateSeries one(std::size_t order1, std::size_t order2) {
    TruncatedBivariateSeries s(order1, order2);
    s.at(0, 0) = Ring(Rational(1));
    return s;
  }

  std::size_t order1() const noexcept { return order1_; }
  std::size_t order2() const noexcept { return order2_; }

  Ring& at(std::size_t m1, std::size_t m2) {
    return coeffs_[m1 * (order2_ + 1) + m2];
  }
  const Ring& at(std::size_t m1, std::size_t m2) const {
    return coeffs_[m1 * (order2_ + 1) + m2];
  }

  bool same_orders(const TruncatedBivariateSeries& o) const noexcept {
    return order1_ == o.order1_ && order2_ == o.order2_;
  }

  TruncatedBivariateSeries& operator+=(const TruncatedBivariateSeries& o) {
    require_same_orders(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedBivariateSeries& operator-=(const TruncatedBivariateSeries& o) {
    require_same_orders(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedBivariateSeries& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c = c * s;
    return *this;
  }

  friend bool operator==(const TruncatedBivariateSeries&,
                         const TruncatedBivariateSeries&) = default;

  void require_same_orders(const TruncatedBivariateSeries& o) const {
    if (!same_orders(o))
      throw std::invalid_argument("series: truncation orders differ");
  }

 private:
  std::size_t order1_;
  std::size_t order2_;
  std::vector<Ring> coeffs_;
};

// Binomial convolution in each index.
template <class Ring>
TruncatedBivariateSeries<Ring> series_mul(
    const TruncatedBivariateSeries<Ring>& a,
    const TruncatedBivariateSeries<Ring>& b) {
  a.require_same_orders(b);
  TruncatedBivariateSeries<Ring> c(a.order1(), a.order2());
  for (std::size_t k1 = 0; k1 <= a.order1(); ++k1)
    for (std::size_t k2 = 0; k2 <= a.order2(); ++k2) {
      const Ring& left = a.at(k1, k2);
      if (is_zero(left)) continue;
      for (std::size_t l1 = 0; k1 + l1 <= a.order1(); ++l1)
        for (std::size_t l2 = 0; k2 + l2 <= a.order2(); ++l2) {
          const Ring& right = b.at(l1, l2);
          if (is_zero(right)) continue;
          Rational weight(binomial(k1 + l1, k1) * binomial(k2 + l2, k2));
          c.at(k1 + l1, k2 + l2) += (left * right) * weight;
        }
    }
  return c;
}

template <class Ring>
TruncatedBivariateSeries<Ring> series_int_pow(
    const TruncatedBivariateSeries<Ring>& s, unsigned k) {
  auto result = TruncatedBivariateSeries<Ring>::one(s.order1(), s.order2());
  auto base = s;
  while (k > 0) {
    if (k & 1U) result = series_mul(result, base);
    k >>= 1U;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

// log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k; u is nilpotent at the
// truncation, so the sum is finite.
template <class Ring>
TruncatedBivariateSeries<Ring> series_log(
    const TruncatedBivariateSeries<Ring>& s) {
  if (!(s.at(0, 0) == Ring(Rational(1))))
    throw std::domain_error("series_log: constant coefficient must be 1");
  auto u = s;
  u.at(0, 0) = Ring();
  TruncatedBivariateSeries<Ring> result(s.order1(), s.order2());
  auto power = u;
  const std::size_t terms = s.order1() + s.order2();
  for (std::size_t k = 1; k <= terms; ++k) {
    auto term = power;
    term *= Rational((k % 2 == 1) ? 1 : -1, static_cast<unsigned long>(k));
    result += term;
    if (k < terms) power = series_mul(power, u);
  }
  return result;
}

template <class Ring>
TruncatedBivariateSeries<Ring> series_exp(
    const TruncatedBivariateSeries<Ring>& s) {
  if (!is_zero(s.at(0, 0)))
    throw std::domain_error("series_exp: constant coefficient must be 0");
  auto result = TruncatedBivariateSeries<Ring>::one(s.order1(), s.order2());
  auto power = TruncatedBivariateSeries<Ring>::one(s.order1(), s.order2());
  const std::size_t terms = s.order1() + s.order2();
  for (std::size_t k = 1; k <= terms; ++k) {
    power = series_mul(power, s);
    auto term = power;
    term *= Rational(1) / Rational(factorial(k));
    result += term;
  }
  return result;
}

}  // namespace cyclomat

#endif  // CYCLOMAT_POLYSERIES_HPP
