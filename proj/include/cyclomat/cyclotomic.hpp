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

#ifndef CYCLOMAT_CYCLOTOMIC_HPP
#define CYCLOMAT_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclomat/exact_linalg.hpp"
#include "cyclomat/matroid.hpp"

namespace cyclomat {

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = p_1^{m_1} ... p_r^{m_r} with p_1 < ... < p_r.
struct Factorization {
  std::vector<PrimePower> factors;

  std::size_t prime_count() const noexcept { return factors.size(); }
  std::vector<std::uint64_t> primes() const;
  std::uint64_t value() const;
  // s = p_1 ... p_r
  std::uint64_t radical() const;
  // t = n / s
  std::uint64_t cofactor() const;
  bool square_free() const;
};

inline constexpr std::uint64_t kFactorizationBound = 1'000'000'000;

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Integer polynomial, lowest degree first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const;

  // Exact division by a monic divisor; throws if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial cyclotomic_polynomial(std::uint64_t n);

// Largest ground set accepted by cyclotomic_matroid (columns of a dense
// matrix; enumeration limits apply separately).
inline constexpr std::uint64_t kCyclotomicOrderBound = 4096;

// Column j holds the coordinates of zeta^j in the power basis
// 1, zeta, ..., zeta^{phi(n)-1}, i.e. x^j mod Phi_n.
RepresentedMatroid cyclotomic_matroid(std::uint64_t n);
IntegerMatrix cyclotomic_matrix(std::uint64_t n);

// Positions j in [0, n) with gcd(j, n) = 1.
GroundSubset primitive_roots_subset(std::uint64_t n);

// E_j = {j, j + t, ..., j + (s-1) t} for j in [0, t).
std::vector<GroundSubset> block_decomposition(std::uint64_t n);

struct ParallelExtensionReport {
  std::uint64_t n = 0;
  bool holds = false;
  // scalars[j]: column(j + n) = scalars[j] * column(j) in mu_{2n}.
  std::vector<Rational> scalars;
};

ParallelExtensionReport verify_parallel_extension(std::uint64_t n);

}  // namespace cyclomat

#endif  // CYCLOMAT_CYCLOTOMIC_HPP
