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

#include "cyclomat/polyseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclomat {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

namespace {

// Appends one signed term to a sum being rendered as text.
void append_term(std::ostringstream& os, bool first, const Rational& c,
                 const std::string& monomial) {
  const bool negative = c < 0;
  const Rational magnitude = negative ? Rational(-c) : c;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << magnitude.get_str();
  } else if (magnitude == 1) {
    os << monomial;
  } else {
    os << magnitude.get_str() << '*' << monomial;
  }
}

std::string render_power(const std::string& name, long exponent) {
  if (exponent == 1) return name;
  return name + "^" + std::to_string(exponent);
}

std::string render_monomial(const std::vector<unsigned>& e,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += render_power(names[i], e[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Tutte

TuttePolynomial TuttePolynomial::constant(const BigInt& c) {
  TuttePolynomial t;
  t.add_term(0, 0, c);
  return t;
}

TuttePolynomial TuttePolynomial::x() {
  TuttePolynomial t;
  t.add_term(1, 0, 1);
  return t;
}

TuttePolynomial TuttePolynomial::y() {
  TuttePolynomial t;
  t.add_term(0, 1, 1);
  return t;
}

void TuttePolynomial::add_term(unsigned i, unsigned j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt TuttePolynomial::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find(Key{i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

Rational TuttePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [key, c] : terms_) {
    Rational term(c);
    for (unsigned k = 0; k < key.first; ++k) term *= x;
    for (unsigned k = 0; k < key.second; ++k) term *= y;
    sum += term;
  }
  return sum;
}

TuttePolynomial TuttePolynomial::swapped() const {
  TuttePolynomial t;
  for (const auto& [key, c] : terms_) t.add_term(key.second, key.first, c);
  return t;
}

bool TuttePolynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

std::string TuttePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  static const std::vector<std::string> names{"x", "y"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_term(os, first, Rational(c),
                render_monomial({key.first, key.second}, names));
    first = false;
  }
  return os.str();
}

TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b) {
  TuttePolynomial out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

// ---------------------------------------------------------------- multivariate

MultivariatePolynomial::MultivariatePolynomial(std::size_t variable_count)
    : variable_count_(variable_count) {}

MultivariatePolynomial::MultivariatePolynomial(std::size_t variable_count,
                                               const Rational& constant)
    : variable_count_(variable_count) {
  add_term(Exponents(variable_count, 0), constant);
}

MultivariatePolynomial MultivariatePolynomial::variable(
    std::size_t variable_count, std::size_t index) {
  if (index >= variable_count)
    throw std::out_of_range("MultivariatePolynomial::variable: bad index");
  MultivariatePolynomial p(variable_count);
  Exponents e(variable_count, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void MultivariatePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variable_count_)
    throw std::invalid_argument("MultivariatePolynomial: exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultivariatePolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultivariatePolynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_)
    best = std::max(best, std::accumulate(e.begin(), e.end(), 0U));
  return best;
}

bool MultivariatePolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.get_den() == 1; });
}

bool MultivariatePolynomial::is_symmetric() const {
  // Adjacent transpositions generate the symmetric group.
  for (std::size_t i = 0; i + 1 < variable_count_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponents swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (coefficient(swapped) != c) return false;
    }
  }
  return true;
}

Rational MultivariatePolynomial::evaluate(
    const std::vector<Rational>& point) const {
  if (point.size() != variable_count_)
    throw std::invalid_argument("MultivariatePolynomial::evaluate: arity");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

MultivariatePolynomial MultivariatePolynomial::specialize(
    std::size_t index, const Rational& value) const {
  if (index >= variable_count_)
    throw std::out_of_range("MultivariatePolynomial::specialize: bad index");
  MultivariatePolynomial out(variable_count_ - 1);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (unsigned k = 0; k < e[index]; ++k) term *= value;
    Exponents reduced;
    reduced.reserve(variable_count_ - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != index) reduced.push_back(e[i]);
    out.add_term(reduced, term);
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::compose(
    const std::vector<MultivariatePolynomial>& images) const {
  if (images.size() != variable_count_)
    throw std::invalid_argument("MultivariatePolynomial::compose: arity");
  const std::size_t target =
      images.empty() ? 0 : images.front().variable_count();
  for (const auto& img : images)
    if (img.variable_count() != target)
      throw std::invalid_argument("MultivariatePolynomial::compose: mixed rings");
  std::vector<std::vector<MultivariatePolynomial>> powers(variable_count_);
  MultivariatePolynomial out(target);
  for (const auto& [e, c] : terms_) {
    MultivariatePolynomial term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MultivariatePolynomial(target, 1));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
      if (e[i] > 0) term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

MultivariatePolynomial MultivariatePolynomial::pow(unsigned k) const {
  MultivariatePolynomial result(variable_count_, 1);
  MultivariatePolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string MultivariatePolynomial::to_string(
    const std::vector<std::string>& names) const {
  std::vector<std::string> labels = names;
  if (labels.empty())
    for (std::size_t i = 0; i < variable_count_; ++i)
      labels.push_back("x" + std::to_string(i + 1));
  if (labels.size() != variable_count_)
    throw std::invalid_argument("MultivariatePolynomial::to_string: names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, render_monomial(e, labels));
    first = false;
  }
  return os.str();
}

void MultivariatePolynomial::check_compatible(
    const MultivariatePolynomial& o) const {
  if (variable_count_ != o.variable_count_)
    throw std::invalid_argument("MultivariatePolynomial: variable count mismatch");
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(
    const MultivariatePolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(
    const MultivariatePolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultivariatePolynomial operator*(const MultivariatePolynomial& a,
                                 const MultivariatePolynomial& b) {
  a.check_compatible(b);
  MultivariatePolynomial out(a.variable_count_);
  MultivariatePolynomial::Exponents e(a.variable_count_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultivariatePolynomial operator*(MultivariatePolynomial a, const Rational& s) {
  if (s == 0) return MultivariatePolynomial(a.variable_count_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

std::optional<MultivariatePolynomial> poly_divide_exact(
    const MultivariatePolynomial& a, const MultivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("poly_divide_exact: zero divisor");
  if (a.variable_count() != b.variable_count())
    throw std::invalid_argument("poly_divide_exact: variable count mismatch");
  const auto& [lead_b, lead_c] = *b.terms().rbegin();
  MultivariatePolynomial remainder = a;
  MultivariatePolynomial quotient(a.variable_count());
  // Lex is a well-order, so the leading term strictly decreases to zero or
  // reaches a term not divisible by lead(b).
  while (!remainder.is_zero()) {
    const auto& [lead_r, lead_rc] = *remainder.terms().rbegin();
    MultivariatePolynomial::Exponents shift(a.variable_count());
    for (std::size_t i = 0; i < shift.size(); ++i) {
      if (lead_r[i] < lead_b[i]) return std::nullopt;
      shift[i] = lead_r[i] - lead_b[i];
    }
    MultivariatePolynomial term(a.variable_count());
    term.add_term(shift, lead_rc / lead_c);
    quotient += term;
    remainder -= term * b;
  }
  return quotient;
}

// ---------------------------------------------------------------- Laurent

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
  add_term(0, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Rational& c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPolynomial::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

bool LaurentPolynomial::is_integral_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.first >= 0 && kv.second.get_den() == 1;
  });
}

Rational LaurentPolynomial::evaluate(const Rational& at) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && at == 0)
      throw std::domain_error("LaurentPolynomial::evaluate: pole at zero");
    Rational term = c;
    const Rational factor = e >= 0 ? at : Rational(1) / at;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) term *= factor;
    sum += term;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(Rational(1));
  LaurentPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string LaurentPolynomial::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const std::string name(variable);
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, e == 0 ? std::string() : render_power(name, e));
    first = false;
  }
  return os.str();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

}  // namespace cyclomat
