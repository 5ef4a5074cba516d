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

#include "cyclomat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cyclomat {

// ---------------------------------------------------------------- GroundSubset

GroundSubset::GroundSubset(std::size_t width, std::uint64_t mask)
    : width_(width), mask_(mask) {
  if (width > kMaxWidth)
    throw LimitExceeded("GroundSubset: ground set wider than 64 elements");
  if (width < kMaxWidth && (mask >> width) != 0)
    throw std::invalid_argument("GroundSubset: element outside ground set");
}

GroundSubset GroundSubset::full(std::size_t width) {
  if (width > kMaxWidth)
    throw LimitExceeded("GroundSubset: ground set wider than 64 elements");
  return {width, width == kMaxWidth ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << width) - 1};
}

GroundSubset GroundSubset::of(std::size_t width,
                              std::span<const std::size_t> elements) {
  std::uint64_t mask = 0;
  for (auto e : elements) {
    if (e >= width)
      throw std::invalid_argument("GroundSubset: element outside ground set");
    mask |= std::uint64_t{1} << e;
  }
  return {width, mask};
}

std::size_t GroundSubset::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> GroundSubset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < width_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

GroundSubset GroundSubset::complement() const {
  return {width_, full(width_).mask_ & ~mask_};
}

GroundSubset GroundSubset::with(std::size_t i) const {
  if (i >= width_)
    throw std::invalid_argument("GroundSubset: element outside ground set");
  return {width_, mask_ | (std::uint64_t{1} << i)};
}

// ---------------------------------------------------------------- matroid

RepresentedMatroid::RepresentedMatroid(std::vector<std::string> labels,
                                       RationalMatrix representation)
    : labels_(std::move(labels)), matrix_(std::move(representation)) {
  if (labels_.size() != matrix_.cols())
    throw std::invalid_argument(
        "RepresentedMatroid: one label per column required");
  columns_.resize(matrix_.cols());
  for (std::size_t c = 0; c < matrix_.cols(); ++c) {
    BigInt lcm = 1;
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              matrix_(r, c).get_den_mpz_t());
    auto& col = columns_[c];
    col.resize(matrix_.rows());
    for (std::size_t r = 0; r < matrix_.rows(); ++r)
      col[r] = matrix_(r, c).get_num() * (lcm / matrix_(r, c).get_den());
  }
  rank_ = cyclomat::rank(matrix_);
}

std::size_t RepresentedMatroid::rank_of(const GroundSubset& subset) const {
  if (subset.width() != ground_size())
    throw std::invalid_argument("rank_of: subset width differs from ground set");
  IncrementalEchelon echelon(matrix_.rows());
  for (std::size_t i : subset.elements()) {
    echelon.push(columns_[i]);
    if (echelon.rank() == rank_) break;
  }
  return echelon.rank();
}

bool RepresentedMatroid::is_independent(const GroundSubset& subset) const {
  return rank_of(subset) == subset.size();
}

bool RepresentedMatroid::is_basis(const GroundSubset& subset) const {
  return subset.size() == rank_ && is_independent(subset);
}

namespace {

// Number of leading elements whose in/out choices are fixed per task.
std::size_t prefix_depth(std::size_t ground) {
  return std::min<std::size_t>(ground, 8);
}

// Pushes the prefix elements of `task`; false if any of them is dependent.
bool push_prefix(const RepresentedMatroid& m, std::uint64_t task,
                 std::size_t depth, IncrementalEchelon& echelon) {
  for (std::size_t i = 0; i < depth; ++i)
    if ((task >> i) & 1U)
      if (!echelon.push(m.integer_columns()[i])) return false;
  return true;
}

class BasisSearch {
 public:
  BasisSearch(const RepresentedMatroid& m, bool list)
      : m_(m), list_(list), echelon_(m.representation().rows()) {}

  void run(std::uint64_t task, std::size_t depth) {
    if (std::popcount(task) > static_cast<int>(m_.rank())) return;
    if (!push_prefix(m_, task, depth, echelon_)) return;
    visit(depth, task);
  }

  std::uint64_t count = 0;
  std::vector<GroundSubset> bases;

 private:
  void visit(std::size_t i, std::uint64_t mask) {
    if (echelon_.rank() == m_.rank()) {
      ++count;
      if (list_) bases.emplace_back(m_.ground_size(), mask);
      return;
    }
    const std::size_t needed = m_.rank() - echelon_.rank();
    if (m_.ground_size() - i < needed) return;
    if (echelon_.push(m_.integer_columns()[i])) {
      visit(i + 1, mask | (std::uint64_t{1} << i));
      echelon_.pop();
    }
    visit(i + 1, mask);
  }

  const RepresentedMatroid& m_;
  bool list_;
  IncrementalEchelon echelon_;
};

}  // namespace

BasisEnumeration enumerate_bases(const RepresentedMatroid& m, bool list,
                                 const SweepOptions& options) {
  require_within(m.ground_size(), options.limits.basis_ground,
                 "enumerate_bases");
  const std::size_t depth = prefix_depth(m.ground_size());
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<BasisEnumeration> partial(tasks);
  parallel_for(tasks, options.threads, [&](std::size_t t) {
    BasisSearch search(m, list);
    search.run(t, depth);
    partial[t].count = search.count;
    partial[t].bases = std::move(search.bases);
  });
  BasisEnumeration out;
  for (auto& p : partial) {
    out.count += p.count;
    out.bases.insert(out.bases.end(), p.bases.begin(), p.bases.end());
  }
  std::sort(out.bases.begin(), out.bases.end());
  return out;
}

RepresentedMatroid dual(const RepresentedMatroid& m) {
  return RepresentedMatroid(m.labels(),
                            kernel_basis(m.representation()).transpose());
}

RepresentedMatroid direct_sum(std::span<const RepresentedMatroid> parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.representation().rows();
    cols += p.ground_size();
  }
  RationalMatrix block(rows, cols);
  std::vector<std::string> labels;
  labels.reserve(cols);
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& a = parts[k].representation();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) block(r0 + r, c0 + c) = a(r, c);
    for (const auto& l : parts[k].labels())
      labels.push_back("[" + std::to_string(k) + "]" + l);
    r0 += a.rows();
    c0 += a.cols();
  }
  return RepresentedMatroid(std::move(labels), std::move(block));
}

RepresentedMatroid restriction(const RepresentedMatroid& m,
                               const GroundSubset& subset) {
  if (subset.width() != m.ground_size())
    throw std::invalid_argument("restriction: subset width differs");
  const auto keep = subset.elements();
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(m.labels()[i]);
  return RepresentedMatroid(std::move(labels),
                            m.representation().select_columns(keep));
}

namespace {

class HistogramSweep {
 public:
  explicit HistogramSweep(const RepresentedMatroid& m)
      : counts(m.ground_size() + 1,
               std::vector<std::uint64_t>(m.rank() + 1, 0)),
        m_(m),
        echelon_(m.representation().rows()) {}

  void run(std::uint64_t task, std::size_t depth) {
    std::size_t size = 0;
    for (std::size_t i = 0; i < depth; ++i)
      if ((task >> i) & 1U) {
        ++size;
        echelon_.push(m_.integer_columns()[i]);
      }
    visit(depth, size);
  }

  SizeRankHistogram counts;

 private:
  void visit(std::size_t i, std::size_t size) {
    const std::size_t r = echelon_.rank();
    if (r == m_.rank()) {
      // Every superset has full rank: add the binomial row in one step.
      const std::size_t rest = m_.ground_size() - i;
      for (std::size_t k = 0; k <= rest; ++k)
        counts[size + k][r] += binomial(rest, k).get_ui();
      return;
    }
    if (i == m_.ground_size()) {
      ++counts[size][r];
      return;
    }
    visit(i + 1, size);
    const bool independent = echelon_.push(m_.integer_columns()[i]);
    visit(i + 1, size + 1);
    if (independent) echelon_.pop();
  }

  const RepresentedMatroid& m_;
  IncrementalEchelon echelon_;
};

}  // namespace

SizeRankHistogram size_rank_histogram(const RepresentedMatroid& m,
                                      const SweepOptions& options) {
  require_within(m.ground_size(), options.limits.tutte_ground, "tutte");
  const std::size_t depth = prefix_depth(m.ground_size());
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<SizeRankHistogram> partial(tasks);
  parallel_for(tasks, options.threads, [&](std::size_t t) {
    HistogramSweep sweep(m);
    sweep.run(t, depth);
    partial[t] = std::move(sweep.counts);
  });
  SizeRankHistogram total(m.ground_size() + 1,
                          std::vector<std::uint64_t>(m.rank() + 1, 0));
  for (const auto& p : partial)
    for (std::size_t k = 0; k < total.size(); ++k)
      for (std::size_t r = 0; r < total[k].size(); ++r) total[k][r] += p[k][r];
  return total;
}

TuttePolynomial tutte(const RepresentedMatroid& m, const SweepOptions& options) {
  const auto counts = size_rank_histogram(m, options);
  const std::size_t full = m.rank();
  // (x-1)^(full-r) (y-1)^(k-r), expanded binomially.
  TuttePolynomial t;
  for (std::size_t k = 0; k < counts.size(); ++k)
    for (std::size_t r = 0; r < counts[k].size(); ++r) {
      const std::uint64_t c = counts[k][r];
      if (c == 0) continue;
      const std::size_t a = full - r, b = k - r;
      for (std::size_t i = 0; i <= a; ++i)
        for (std::size_t j = 0; j <= b; ++j) {
          BigInt term = BigInt(static_cast<unsigned long>(c)) *
                        binomial(a, i) * binomial(b, j);
          if ((a - i + b - j) % 2 == 1) term = -term;
          t.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), term);
        }
    }
  if (!t.has_nonnegative_coefficients())
    throw std::logic_error("tutte: negative coefficient produced");
  return t;
}

namespace {

class IndependentSweep {
 public:
  explicit IndependentSweep(const RepresentedMatroid& m)
      : by_size(m.rank() + 1, 0),
        m_(m),
        echelon_(m.representation().rows()) {}

  void run(std::uint64_t task, std::size_t depth) {
    if (!push_prefix(m_, task, depth, echelon_)) return;
    visit(depth);
  }

  std::vector<std::uint64_t> by_size;

 private:
  void visit(std::size_t i) {
    if (i == m_.ground_size() || echelon_.rank() == m_.rank()) {
      ++by_size[echelon_.rank()];
      return;
    }
    visit(i + 1);
    if (echelon_.push(m_.integer_columns()[i])) {
      visit(i + 1);
      echelon_.pop();
    }
  }

  const RepresentedMatroid& m_;
  IncrementalEchelon echelon_;
};

}  // namespace

LaurentPolynomial independence_census(const RepresentedMatroid& m,
                                      const SweepOptions& options) {
  require_within(m.ground_size(), options.limits.basis_ground,
                 "independence_census");
  const std::size_t depth = prefix_depth(m.ground_size());
  const std::size_t tasks = std::size_t{1} << depth;
  std::vector<std::vector<std::uint64_t>> partial(tasks);
  parallel_for(tasks, options.threads, [&](std::size_t t) {
    IndependentSweep sweep(m);
    sweep.run(t, depth);
    partial[t] = std::move(sweep.by_size);
  });
  LaurentPolynomial census;
  for (const auto& p : partial)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0)
        census.add_term(static_cast<int>(m.rank() - k),
                        Rational(BigInt(static_cast<unsigned long>(p[k]))));
  return census;
}

}  // namespace cyclomat
