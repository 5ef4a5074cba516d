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

#ifndef CYCLOMAT_SIMPLICIAL_HPP
#define CYCLOMAT_SIMPLICIAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclomat/exact_linalg.hpp"
#include "cyclomat/matroid.hpp"
#include "cyclomat/sweep.hpp"

namespace cyclomat {

// A face as increasing global vertex ids. Vertices are numbered part by part:
// vertex a of part i has id offset(i) + a.
using Face = std::vector<std::size_t>;

// Simplicial join of r point sets of sizes n_1, ..., n_r.
class JoinComplex {
 public:
  explicit JoinComplex(std::vector<std::size_t> part_sizes);

  const std::vector<std::size_t>& part_sizes() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::size_t dimension() const noexcept { return parts_.size() - 1; }
  std::size_t vertex_count() const noexcept { return offsets_.back(); }
  std::size_t facet_count() const noexcept;

  // Faces of dimension d (d = -1 gives the empty face), lexicographic.
  std::vector<Face> faces(long d) const;

  // Facet with local vertex index coords[i] in part i, and its position in
  // the lexicographic facet list (mixed radix).
  Face facet(const std::vector<std::size_t>& coords) const;
  std::size_t facet_index(const std::vector<std::size_t>& coords) const;
  std::vector<std::size_t> facet_coordinates(std::size_t index) const;

  // Local index of a global vertex id, with its part.
  std::pair<std::size_t, std::size_t> locate(std::size_t vertex) const;

  std::string facet_label(std::size_t index) const;

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> offsets_;  // size r + 1
};

// Boundary map C_d -> C_{d-1} of the augmented chain complex; rows are the
// (d-1)-faces, columns the d-faces, both lexicographic. The sign of the face
// obtained by deleting the i-th smallest vertex is (-1)^i.
IntegerMatrix boundary_matrix(const JoinComplex& c, long d);

// Columns of the top boundary map, labelled by facets.
RepresentedMatroid simplicial_matroid(const JoinComplex& c);

using FacetSet = GroundSubset;

struct HomologySummary {
  std::size_t free_rank = 0;
  // |torsion H~_{r-2}(Delta_T, Z)| from the Smith form of the restricted top
  // boundary map.
  BigInt torsion_order = 1;
  // The same order computed after rewriting the restricted boundary in a
  // Z-basis of the cycle lattice ker d_{r-2}.
  BigInt cycle_route_torsion_order = 1;
};

// H~_{r-2} of the complex obtained by attaching the facets in T to the
// (r-2)-skeleton. T must be a basis of the simplicial matroid.
HomologySummary tree_homology(const JoinComplex& c, const FacetSet& tree);

// prod_i n_i^{prod_{j != i} (n_j - 1)}
BigInt bolker_bound(const std::vector<std::size_t>& part_sizes);

struct AdinSummary {
  std::uint64_t basis_count = 0;
  BigInt weighted_sum = 0;  // sum of squared torsion orders
  BigInt bolker_bound = 0;
  BigInt max_torsion = 1;
  std::uint64_t nontrivial_torsion_bases = 0;
};

AdinSummary adin_sum(const std::vector<std::size_t>& part_sizes,
                     const SweepOptions& options = {});

// Facets meeting vertex 0 of some part. Parts must be distinct primes.
FacetSet star_tree(const std::vector<std::size_t>& part_primes);

}  // namespace cyclomat

#endif  // CYCLOMAT_SIMPLICIAL_HPP
