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

#ifndef CYCLOMAT_MATROID_HPP
#define CYCLOMAT_MATROID_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclomat/exact_linalg.hpp"
#include "cyclomat/polyseries.hpp"
#include "cyclomat/sweep.hpp"

namespace cyclomat {

// Subset of a ground set of at most 64 positions.
class GroundSubset {
 public:
  static constexpr std::size_t kMaxWidth = 64;

  GroundSubset() = default;
  GroundSubset(std::size_t width, std::uint64_t mask);

  static GroundSubset empty(std::size_t width) { return {width, 0}; }
  static GroundSubset full(std::size_t width);
  static GroundSubset of(std::size_t width, std::span<const std::size_t> elements);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1U; }
  std::vector<std::size_t> elements() const;
  GroundSubset complement() const;
  GroundSubset with(std::size_t i) const;

  friend bool operator==(const GroundSubset&, const GroundSubset&) = default;
  friend auto operator<=>(const GroundSubset& a, const GroundSubset& b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::size_t width_ = 0;
  std::uint64_t mask_ = 0;
};

// Matroid on the columns of a rational matrix.
class RepresentedMatroid {
 public:
  RepresentedMatroid(std::vector<std::string> labels,
                     RationalMatrix representation);

  std::size_t ground_size() const noexcept { return labels_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RationalMatrix& representation() const noexcept { return matrix_; }
  // Columns cleared of denominators; each is a nonzero multiple of the
  // rational column, so the matroid is unchanged.
  const std::vector<std::vector<BigInt>>& integer_columns() const noexcept {
    return columns_;
  }

  std::size_t rank_of(const GroundSubset& subset) const;
  bool is_independent(const GroundSubset& subset) const;
  bool is_basis(const GroundSubset& subset) const;

 private:
  std::vector<std::string> labels_;
  RationalMatrix matrix_;
  std::vector<std::vector<BigInt>> columns_;
  std::size_t rank_ = 0;
};

struct BasisEnumeration {
  std::uint64_t count = 0;
  std::vector<GroundSubset> bases;  // ascending by mask; filled on request
};

BasisEnumeration enumerate_bases(const RepresentedMatroid& m, bool list = false,
                                 const SweepOptions& options = {});

// Representation is the transpose of a kernel basis of m's representation.
RepresentedMatroid dual(const RepresentedMatroid& m);

// Block-diagonal representation; labels are prefixed by the summand index.
RepresentedMatroid direct_sum(std::span<const RepresentedMatroid> parts);

RepresentedMatroid restriction(const RepresentedMatroid& m,
                               const GroundSubset& subset);

// counts[k][r] = number of subsets of size k and rank r.
using SizeRankHistogram = std::vector<std::vector<std::uint64_t>>;

SizeRankHistogram size_rank_histogram(const RepresentedMatroid& m,
                                      const SweepOptions& options = {});

// Corank-nullity sum over all subsets.
TuttePolynomial tutte(const RepresentedMatroid& m,
                      const SweepOptions& options = {});

// sum over independent I of y^(rank - |I|), i.e. T(y + 1, 1).
LaurentPolynomial independence_census(const RepresentedMatroid& m,
                                      const SweepOptions& options = {});

}  // namespace cyclomat

#endif  // CYCLOMAT_MATROID_HPP
