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

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclomat/simplicial.hpp"
#include "oracles.hpp"

using namespace cyclomat;

namespace {

using Parts = std::vector<std::size_t>;

// Elementary symmetric polynomial e_k of the part sizes: number of faces
// with k vertices.
std::uint64_t elementary(const Parts& parts, std::size_t k) {
  std::vector<std::uint64_t> e(k + 1, 0);
  e[0] = 1;
  for (auto n : parts)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * n;
  return e[k];
}

std::uint64_t top_betti(const Parts& parts) {
  std::uint64_t b = 1;
  for (auto n : parts) b *= n - 1;
  return b;
}

const std::vector<Parts> kComplexes{{1},       {2},       {5},       {2, 2},
                                    {2, 3},    {3, 3},    {1, 4},    {2, 2, 2},
                                    {2, 2, 3}, {2, 3, 5}, {3, 3, 3}, {2, 2, 2, 2}};

}  // namespace

TEST_CASE("join complex faces and facet coordinates") {
  for (const auto& parts : kComplexes) {
    const JoinComplex c(parts);
    CHECK(c.vertex_count() == std::accumulate(parts.begin(), parts.end(), std::size_t{0}));
    CHECK(c.faces(-1) == std::vector<Face>{Face{}});
    for (long d = 0; d <= static_cast<long>(c.dimension()); ++d) {
      const auto faces = c.faces(d);
      CHECK(faces.size() == elementary(parts, d + 1));
      CHECK(std::is_sorted(faces.begin(), faces.end()));
      for (const auto& f : faces) {
        CHECK(f.size() == static_cast<std::size_t>(d + 1));
        // At most one vertex from each part.
        std::vector<std::size_t> seen;
        for (auto v : f) seen.push_back(c.locate(v).first);
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      }
    }
    CHECK(c.facet_count() == c.faces(c.dimension()).size());
    const auto facets = c.faces(c.dimension());
    for (std::size_t i = 0; i < c.facet_count(); ++i) {
      const auto coords = c.facet_coordinates(i);
      CHECK(c.facet_index(coords) == i);
      CHECK(c.facet(coords) == facets[i]);
    }
  }
  const JoinComplex c({2, 3});
  CHECK(c.facet_label(4) == "(1,1)");
  CHECK(c.locate(3) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK_THROWS(JoinComplex(Parts{}));
}

TEST_CASE("boundary of a boundary vanishes") {
  for (const auto& parts : kComplexes) {
    const JoinComplex c(parts);
    const long top = static_cast<long>(c.dimension());
    const IntegerMatrix aug = boundary_matrix(c, 0);
    CHECK(aug.rows() == 1);
    for (std::size_t j = 0; j < aug.cols(); ++j) CHECK(aug(0, j) == 1);
    for (long d = 1; d <= top; ++d)
      CHECK((boundary_matrix(c, d - 1) * boundary_matrix(c, d)).is_zero());
    CHECK_THROWS_AS(boundary_matrix(c, top + 1), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix(c, -1), std::out_of_range);
  }
}

TEST_CASE("boundary signs") {
  // Edge {0, 2} of the join of two points with two points: d = v2 - v0.
  const IntegerMatrix d1 = boundary_matrix(JoinComplex({2, 2}), 1);
  REQUIRE(d1.rows() == 4);
  CHECK(d1(0, 0) == -1);
  CHECK(d1(2, 0) == 1);
}

TEST_CASE("simplicial matroid rank is facets minus top Betti number") {
  for (const auto& parts : kComplexes) {
    const JoinComplex c(parts);
    const RepresentedMatroid m = simplicial_matroid(c);
    CHECK(m.ground_size() == c.facet_count());
    CHECK(m.rank() == c.facet_count() - top_betti(parts));
    CHECK(m.labels().front() == c.facet_label(0));
  }
}

TEST_CASE("product bound values") {
  CHECK(bolker_bound({2, 2}) == 4);
  CHECK(bolker_bound({2, 3}) == 12);
  CHECK(bolker_bound({3, 3}) == 81);
  CHECK(bolker_bound({2, 2, 2}) == 8);
  CHECK(bolker_bound({2, 2, 3}) == 48);
  CHECK(bolker_bound({2, 3, 3}) == 1296);
  CHECK(bolker_bound({2, 2, 2, 2}) == 16);
  CHECK(bolker_bound({2, 3, 5}) == 518400);
  CHECK(bolker_bound({7}) == 7);
}

TEST_CASE("torsion-weighted basis counts equal the product bound") {
  for (const Parts& parts : {Parts{2, 2}, Parts{2, 3}, Parts{3, 3}, Parts{2, 2, 2},
                             Parts{2, 2, 3}, Parts{5}}) {
    const AdinSummary s = adin_sum(parts);
    CHECK(s.weighted_sum == bolker_bound(parts));
    CHECK(s.bolker_bound == bolker_bound(parts));
    // At most two parts exceed 2 here, so every basis is torsion-free.
    CHECK(BigInt(static_cast<unsigned long>(s.basis_count)) == s.bolker_bound);
    CHECK(s.max_torsion == 1);
  }
  for (const Parts& parts : {Parts{2, 3}, Parts{2, 2, 2}, Parts{3, 3}}) {
    const RepresentedMatroid m = simplicial_matroid(JoinComplex(parts));
    CHECK(adin_sum(parts).basis_count == oracle::brute_basis_count(m.representation()));
  }
}

TEST_CASE("torsion for three parts of size three") {
  const JoinComplex c({3, 3, 3});
  const RepresentedMatroid m = simplicial_matroid(c);
  const IntegerMatrix top = boundary_matrix(c, 2);

  // A basis whose complex carries Z/2 in codimension one: over F_2 the
  // restricted boundary loses one rank, over F_3 it keeps full rank.
  const std::vector<std::size_t> missing{0, 4, 8, 10, 12, 14, 20, 24};
  const FacetSet t = GroundSubset::of(27, missing).complement();
  REQUIRE(m.is_basis(t));
  const HomologySummary h = tree_homology(c, t);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion_order == 2);
  CHECK(h.cycle_route_torsion_order == 2);
  const IntegerMatrix restricted = top.select_columns(t.elements());
  CHECK(oracle::rank_mod_p(restricted, 2) == t.size() - 1);
  CHECK(oracle::rank_mod_p(restricted, 3) == t.size());

  // On sampled bases, trivial torsion coincides with full rank mod 2 and 3.
  std::mt19937_64 rng(41);
  std::vector<std::size_t> order(c.facet_count());
  std::iota(order.begin(), order.end(), 0);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 40; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    const std::vector<std::size_t> pick(order.begin(), order.begin() + m.rank());
    const FacetSet b = GroundSubset::of(c.facet_count(), pick);
    if (!m.is_basis(b)) continue;
    ++found;
    const HomologySummary hb = tree_homology(c, b);
    CHECK(hb.torsion_order == hb.cycle_route_torsion_order);
    const IntegerMatrix rb = top.select_columns(b.elements());
    const bool full_mod_small_primes = oracle::rank_mod_p(rb, 2) == b.size() &&
                                       oracle::rank_mod_p(rb, 3) == b.size();
    if (hb.torsion_order == 1) CHECK(full_mod_small_primes);
  }
  CHECK(found > 0);
}

TEST_CASE("tree homology rejects non-bases") {
  const JoinComplex c({2, 3});
  CHECK_THROWS_AS(tree_homology(c, GroundSubset::full(6)), std::invalid_argument);
  CHECK_THROWS_AS(tree_homology(c, GroundSubset(5, 0)), std::invalid_argument);
}

TEST_CASE("star trees are torsion-free bases") {
  for (const Parts& primes : {Parts{2, 3}, Parts{2, 3, 5}, Parts{3, 5}, Parts{7}}) {
    const JoinComplex c(primes);
    const FacetSet t = star_tree(primes);
    const RepresentedMatroid m = simplicial_matroid(c);
    CHECK(m.is_basis(t));
    CHECK(tree_homology(c, t).torsion_order == 1);
    for (auto f : t.elements()) {
      const auto coords = c.facet_coordinates(f);
      CHECK(std::count(coords.begin(), coords.end(), 0) >= 1);
    }
  }
  CHECK(star_tree({2, 3}).size() == 4);
  CHECK(star_tree({2, 3, 5}).size() == 22);
  CHECK_THROWS_AS(star_tree({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(star_tree({3, 3}), std::invalid_argument);
}
