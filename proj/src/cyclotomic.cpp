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

#include "cyclomat/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclomat {

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& f : factors)
    for (unsigned k = 0; k < f.multiplicity; ++k) n *= f.prime;
  return n;
}

std::uint64_t Factorization::radical() const {
  std::uint64_t s = 1;
  for (const auto& f : factors) s *= f.prime;
  return s;
}

std::uint64_t Factorization::cofactor() const { return value() / radical(); }

bool Factorization::square_free() const {
  for (const auto& f : factors)
    if (f.multiplicity > 1) return false;
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > kFactorizationBound)
    throw LimitExceeded("factorize: n exceeds trial-division bound 10^9");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    f.factors.push_back({p, m});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const auto& [p, m] : factorize(n).factors) {
    phi *= p - 1;
    for (unsigned k = 1; k < m; ++k) phi *= p;
  }
  return phi;
}

// ---------------------------------------------------------------- IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (!divisor.is_monic())
    throw std::invalid_argument("IntPolynomial::divide_exact: divisor not monic");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() < dd + 1) {
    if (!rem.empty())
      throw std::domain_error("IntPolynomial::divide_exact: nonzero remainder");
    return {};
  }
  std::vector<BigInt> quotient(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const BigInt lead = rem[k];
    if (lead == 0) continue;
    quotient[k - dd] = lead;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= lead * divisor.coeffs_[i];
  }
  for (const auto& r : rem)
    if (r != 0)
      throw std::domain_error("IntPolynomial::divide_exact: nonzero remainder");
  return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string mono = i == 0   ? ""
                       : i == 1 ? "x"
                                : "x^" + std::to_string(i);
    if (mono.empty())
      os << magnitude.get_str();
    else if (magnitude == 1)
      os << mono;
    else
      os << magnitude.get_str() << '*' << mono;
    first = false;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

namespace {

IntPolynomial cyclotomic_memo(std::uint64_t n,
                              std::map<std::uint64_t, IntPolynomial>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<BigInt> xn_minus_1(n + 1);
  xn_minus_1[0] = -1;
  xn_minus_1[n] = 1;
  IntPolynomial quotient(std::move(xn_minus_1));
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) quotient = quotient.divide_exact(cyclotomic_memo(d, memo));
  memo.emplace(n, quotient);
  return quotient;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  if (n > kCyclotomicOrderBound)
    throw LimitExceeded("cyclotomic_polynomial: n too large");
  std::map<std::uint64_t, IntPolynomial> memo;
  return cyclotomic_memo(n, memo);
}

IntegerMatrix cyclotomic_matrix(std::uint64_t n) {
  const IntPolynomial phi_n = cyclotomic_polynomial(n);
  const auto& modulus = phi_n.coefficients();
  const std::size_t degree = static_cast<std::size_t>(phi_n.degree());
  IntegerMatrix m(degree, n);
  std::vector<BigInt> current(degree);
  current[0] = 1;
  for (std::uint64_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < degree; ++r) m(r, j) = current[r];
    // Multiply by x, then subtract lead * Phi_n (monic).
    BigInt lead = current[degree - 1];
    for (std::size_t r = degree - 1; r > 0; --r) current[r] = current[r - 1];
    current[0] = 0;
    if (lead != 0)
      for (std::size_t r = 0; r < degree; ++r) current[r] -= lead * modulus[r];
  }
  return m;
}

RepresentedMatroid cyclotomic_matroid(std::uint64_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) labels.push_back("z^" + std::to_string(j));
  return RepresentedMatroid(std::move(labels), to_rational(cyclotomic_matrix(n)));
}

GroundSubset primitive_roots_subset(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("primitive_roots_subset: n >= 1");
  std::vector<std::size_t> positions;
  for (std::uint64_t j = 0; j < n; ++j)
    if (std::gcd(j, n) == 1) positions.push_back(j);
  return GroundSubset::of(n, positions);
}

std::vector<GroundSubset> block_decomposition(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("block_decomposition: n >= 2");
  const Factorization f = factorize(n);
  const std::uint64_t s = f.radical(), t = f.cofactor();
  std::vector<GroundSubset> blocks;
  for (std::uint64_t j = 0; j < t; ++j) {
    std::vector<std::size_t> positions;
    for (std::uint64_t k = 0; k < s; ++k) positions.push_back(j + k * t);
    blocks.push_back(GroundSubset::of(n, positions));
  }
  return blocks;
}

ParallelExtensionReport verify_parallel_extension(std::uint64_t n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("verify_parallel_extension: n must be odd, n >= 3");
  const IntegerMatrix m = cyclotomic_matrix(2 * n);
  ParallelExtensionReport report;
  report.n = n;
  report.holds = true;
  for (std::uint64_t j = 0; j < n; ++j) {
    const auto a = m.column(j), b = m.column(j + n);
    std::size_t k = 0;
    while (k < a.size() && a[k] == 0) ++k;
    if (k == a.size()) {
      report.holds = false;
      report.scalars.emplace_back(0);
      continue;
    }
    const Rational scalar = make_rational(b[k], a[k]);
    bool proportional = scalar != 0;
    for (std::size_t r = 0; r < a.size() && proportional; ++r)
      proportional = Rational(b[r]) == scalar * Rational(a[r]);
    report.holds = report.holds && proportional;
    report.scalars.push_back(proportional ? scalar : Rational(0));
  }
  return report;
}

}  // namespace cyclomat
