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

#ifndef CYCLOMAT_DUALITY_HPP
#define CYCLOMAT_DUALITY_HPP

#include <cstdint>
#include <vector>

#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/matroid.hpp"
#include "cyclomat/report.hpp"
#include "cyclomat/simplicial.hpp"
#include "cyclomat/sweep.hpp"

namespace cyclomat {

// Position j = copy + k * t of Z_n corresponds to facet
// (k mod p_1, ..., k mod p_r) in copy `copy` of the join of the prime parts.
struct DictionaryEntry {
  std::uint64_t copy = 0;
  std::uint64_t k = 0;
  std::vector<std::size_t> facet;  // residues, one per prime
  std::size_t dual_position = 0;   // copy * facet_count + facet index
};

struct DualityDictionary {
  std::uint64_t n = 0;
  Factorization factorization;
  std::uint64_t s = 1;  // square-free part
  std::uint64_t t = 1;  // n / s
  std::vector<DictionaryEntry> entries;  // indexed by j

  JoinComplex complex() const { return JoinComplex(prime_parts()); }
  std::vector<std::size_t> prime_parts() const;
  // Image of a subset of Z_n in the ground set of the t-fold direct sum.
  GroundSubset image(const GroundSubset& subset) const;
};

DualityDictionary duality_dictionary(std::uint64_t n);

// Direct sum of t copies of the simplicial matroid of the join of the primes
// dividing n; ground positions follow DictionaryEntry::dual_position.
RepresentedMatroid simplicial_dual_side(std::uint64_t n);

// Basis B of mu_n <=> image of Z_n \ B is a basis of the dual side
// (exhaustive over phi(n)-subsets when n is within the exhaustive limit),
// plus T_{mu_n}(x, y) = T_{dual side}(y, x) and equal basis counts.
VerificationReport verify_theorem1(std::uint64_t n,
                                   const SweepOptions& options = {});

std::uint64_t qbasis_count(std::uint64_t n, const SweepOptions& options = {});

struct Corollary2Bound {
  BigInt bound;
  bool equality_predicted = false;
};

Corollary2Bound corollary2_bound(std::uint64_t n);

}  // namespace cyclomat

#endif  // CYCLOMAT_DUALITY_HPP
