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

#include "cyclomat/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "cyclomat/cyclotomic.hpp"

namespace cyclomat {

JoinComplex::JoinComplex(std::vector<std::size_t> part_sizes)
    : parts_(std::move(part_sizes)) {
  if (parts_.empty())
    throw std::invalid_argument("JoinComplex: at least one part required");
  offsets_.push_back(0);
  for (auto n : parts_) {
    if (n == 0) throw std::invalid_argument("JoinComplex: part sizes must be >= 1");
    offsets_.push_back(offsets_.back() + n);
  }
}

std::size_t JoinComplex::facet_count() const noexcept {
  std::size_t count = 1;
  for (auto n : parts_) count *= n;
  return count;
}

std::vector<Face> JoinComplex::faces(long d) const {
  std::vector<Face> out;
  const long r = static_cast<long>(parts_.size());
  if (d < -1 || d >= r) return out;
  const std::size_t k = static_cast<std::size_t>(d + 1);
  // Choose k parts (bitmask over parts), then one vertex in each.
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << r); ++chosen) {
    if (static_cast<std::size_t>(std::popcount(chosen)) != k) continue;
    std::vector<std::size_t> which;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if ((chosen >> i) & 1U) which.push_back(i);
    std::vector<std::size_t> local(k, 0);
    for (;;) {
      Face f(k);
      for (std::size_t j = 0; j < k; ++j) f[j] = offsets_[which[j]] + local[j];
      out.push_back(std::move(f));
      bool exhausted = true;
      for (std::size_t pos = k; pos-- > 0;) {
        if (++local[pos] < parts_[which[pos]]) {
          exhausted = false;
          break;
        }
        local[pos] = 0;
      }
      if (exhausted) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face JoinComplex::facet(const std::vector<std::size_t>& coords) const {
  if (coords.size() != parts_.size())
    throw std::invalid_argument("JoinComplex::facet: one coordinate per part");
  Face f(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= parts_[i])
      throw std::out_of_range("JoinComplex::facet: vertex outside part");
    f[i] = offsets_[i] + coords[i];
  }
  return f;
}

std::size_t JoinComplex::facet_index(const std::vector<std::size_t>& coords) const {
  facet(coords);  // validates
  std::size_t index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    index = index * parts_[i] + coords[i];
  return index;
}

std::vector<std::size_t> JoinComplex::facet_coordinates(std::size_t index) const {
  if (index >= facet_count())
    throw std::out_of_range("JoinComplex::facet_coordinates: bad index");
  std::vector<std::size_t> coords(parts_.size());
  for (std::size_t i = parts_.size(); i-- > 0;) {
    coords[i] = index % parts_[i];
    index /= parts_[i];
  }
  return coords;
}

std::pair<std::size_t, std::size_t> JoinComplex::locate(std::size_t vertex) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (vertex < offsets_[i + 1]) return {i, vertex - offsets_[i]};
  throw std::out_of_range("JoinComplex::locate: bad vertex");
}

std::string JoinComplex::facet_label(std::size_t index) const {
  std::string out = "(";
  const auto coords = facet_coordinates(index);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

IntegerMatrix boundary_matrix(const JoinComplex& c, long d) {
  if (d < 0 || d > static_cast<long>(c.dimension()))
    throw std::out_of_range("boundary_matrix: dimension out of range");
  const auto columns = c.faces(d);
  const auto rows = c.faces(d - 1);
  std::map<Face, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  IntegerMatrix m(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Face& f = columns[j];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g;
      g.reserve(f.size() - 1);
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != i) g.push_back(f[k]);
      m(row_index.at(g), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

RepresentedMatroid simplicial_matroid(const JoinComplex& c) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < c.facet_count(); ++i)
    labels.push_back(c.facet_label(i));
  return RepresentedMatroid(
      std::move(labels),
      to_rational(boundary_matrix(c, static_cast<long>(c.dimension()))));
}

namespace {

class TreeHomologyCalculator {
 public:
  explicit TreeHomologyCalculator(const JoinComplex& c)
      : top_(boundary_matrix(c, static_cast<long>(c.dimension()))) {
    const long below = static_cast<long>(c.dimension()) - 1;
    if (below >= 0) {
      cycles_ = integer_kernel_basis(boundary_matrix(c, below));
    } else {
      // C_{-1} maps to zero: every chain is a cycle.
      cycles_ = IntegerMatrix::identity(top_.rows());
    }
    matroid_rank_ = rank(top_);
    // A left inverse of the cycle basis from an invertible square block.
    const RationalMatrix cycles_q = to_rational(cycles_);
    pivot_rows_ = pivot_columns(cycles_q.transpose());
    RationalMatrix block(pivot_rows_.size(), cycles_.cols());
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
      for (std::size_t j = 0; j < cycles_.cols(); ++j)
        block(i, j) = cycles_q(pivot_rows_[i], j);
    block_inverse_ = inverse(block);
  }

  HomologySummary compute(const FacetSet& tree) const {
    if (tree.width() != top_.cols())
      throw std::invalid_argument("tree_homology: facet set width mismatch");
    const auto chosen = tree.elements();
    IntegerMatrix restricted = top_.select_columns(chosen);
    if (chosen.size() != matroid_rank_ || rank(restricted) != chosen.size())
      throw std::invalid_argument("tree_homology: T is not a basis");

    HomologySummary h;
    h.free_rank = cycles_.cols() - chosen.size();
    h.torsion_order = smith_normal_form(restricted).torsion_order();

    const std::size_t k = cycles_.cols();
    IntegerMatrix coords(k, chosen.size());
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      for (std::size_t i = 0; i < k; ++i) {
        Rational x = 0;
        for (std::size_t p = 0; p < pivot_rows_.size(); ++p)
          x += block_inverse_(i, p) * restricted(pivot_rows_[p], j);
        if (x.get_den() != 1)
          throw std::logic_error("tree_homology: boundary outside cycle lattice");
        coords(i, j) = x.get_num();
      }
      for (std::size_t r = 0; r < restricted.rows(); ++r) {
        BigInt back = 0;
        for (std::size_t i = 0; i < k; ++i) back += cycles_(r, i) * coords(i, j);
        if (back != restricted(r, j))
          throw std::logic_error("tree_homology: boundary is not a cycle");
      }
    }
    h.cycle_route_torsion_order = smith_normal_form(coords).torsion_order();
    return h;
  }

 private:
  IntegerMatrix top_;
  IntegerMatrix cycles_;
  std::size_t matroid_rank_ = 0;
  std::vector<std::size_t> pivot_rows_;
  RationalMatrix block_inverse_;
};

}  // namespace

HomologySummary tree_homology(const JoinComplex& c, const FacetSet& tree) {
  return TreeHomologyCalculator(c).compute(tree);
}

BigInt bolker_bound(const std::vector<std::size_t>& part_sizes) {
  BigInt bound = 1;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    unsigned long exponent = 1;
    for (std::size_t j = 0; j < part_sizes.size(); ++j)
      if (j != i) exponent *= part_sizes[j] - 1;
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), part_sizes[i], exponent);
    bound *= factor;
  }
  return bound;
}

AdinSummary adin_sum(const std::vector<std::size_t>& part_sizes,
                     const SweepOptions& options) {
  const JoinComplex complex(part_sizes);
  require_within(complex.facet_count(), options.limits.basis_ground, "adin_sum");
  const RepresentedMatroid m = simplicial_matroid(complex);
  const BasisEnumeration bases = enumerate_bases(m, /*list=*/true, options);
  const TreeHomologyCalculator calculator(complex);

  std::vector<BigInt> torsion(bases.bases.size());
  parallel_for(bases.bases.size(), options.threads, [&](std::size_t i) {
    const HomologySummary h = calculator.compute(bases.bases[i]);
    if (h.free_rank != 0)
      throw std::logic_error("adin_sum: basis with free homology");
    if (h.torsion_order != h.cycle_route_torsion_order)
      throw std::logic_error("adin_sum: torsion routes disagree");
    torsion[i] = h.torsion_order;
  });

  AdinSummary s;
  s.basis_count = bases.count;
  s.bolker_bound = bolker_bound(part_sizes);
  for (const auto& t : torsion) {
    s.weighted_sum += t * t;
    if (t > s.max_torsion) s.max_torsion = t;
    if (t != 1) ++s.nontrivial_torsion_bases;
  }
  return s;
}

FacetSet star_tree(const std::vector<std::size_t>& part_primes) {
  std::set<std::size_t> seen;
  for (auto p : part_primes)
    if (!is_prime(p) || !seen.insert(p).second)
      throw std::invalid_argument("star_tree: parts must be distinct primes");
  const JoinComplex complex(part_primes);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < complex.facet_count(); ++i) {
    const auto coords = complex.facet_coordinates(i);
    if (std::find(coords.begin(), coords.end(), 0) != coords.end())
      members.push_back(i);
  }
  return FacetSet::of(complex.facet_count(), members);
}

}  // namespace cyclomat
