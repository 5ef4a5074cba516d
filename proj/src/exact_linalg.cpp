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

#include "cyclomat/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace cyclomat {

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0)
    throw std::invalid_argument("make_rational: zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

namespace {

// Scales every row by the lcm of its denominators.
IntegerMatrix clear_row_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = m(r, c).get_num() * (lcm / m(r, c).get_den());
  }
  return out;
}

struct Echelon {
  IntegerMatrix rows;
  std::vector<std::size_t> pivots;  // pivot column of row i
};

// Bareiss fraction-free row echelon form. Every intermediate entry is a minor
// of the input, so the divisions are exact.
Echelon fraction_free_echelon(IntegerMatrix a) {
  Echelon e;
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        BigInt v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, c) = 0;
    }
    previous = a(r, c);
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank(const IntegerMatrix& m) {
  return fraction_free_echelon(m).pivots.size();
}

std::size_t rank(const RationalMatrix& m) {
  return fraction_free_echelon(clear_row_denominators(m)).pivots.size();
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = fraction_free_echelon(clear_row_denominators(m));
  const std::size_t k = e.pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  RationalMatrix basis(n, n - k);
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n);
    x[f] = 1;
    for (std::size_t i = k; i-- > 0;) {
      const std::size_t p = e.pivots[i];
      Rational acc = 0;
      for (std::size_t j = p + 1; j < n; ++j)
        if (x[j] != 0) acc += e.rows(i, j) * x[j];
      x[p] = -acc / Rational(e.rows(i, p));
    }
    BigInt lcm = 1;
    for (const auto& v : x)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> ints(n);
    for (std::size_t j = 0; j < n; ++j)
      ints[j] = x[j].get_num() * (lcm / x[j].get_den());
    make_primitive(ints);
    for (std::size_t j = 0; j < n; ++j) basis(j, out) = Rational(ints[j]);
    ++out;
  }
  return basis;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  return fraction_free_echelon(clear_row_denominators(m)).pivots;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    const Rational scale = Rational(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> solve_full_column_rank(const RationalMatrix& a,
                                             std::span<const Rational> b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_full_column_rank: size mismatch");
  const std::size_t n = a.cols();
  RationalMatrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = b[r];
  }
  Echelon e = fraction_free_echelon(clear_row_denominators(augmented));
  if (e.pivots.size() != n || (!e.pivots.empty() && e.pivots.back() == n))
    throw std::domain_error(
        "solve_full_column_rank: not full column rank or inconsistent");
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = Rational(e.rows(i, n));
    for (std::size_t j = i + 1; j < n; ++j) acc -= e.rows(i, j) * x[j];
    x[i] = acc / Rational(e.rows(i, i));
  }
  return x;
}

BigInt SmithForm::torsion_order() const {
  BigInt product = 1;
  for (const auto& d : invariant_factors) product *= d;
  return product;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(IntegerMatrix a, bool track)
      : a_(std::move(a)), track_(track) {
    if (track_) {
      left_ = IntegerMatrix::identity(a_.rows());
      right_ = IntegerMatrix::identity(a_.cols());
    }
  }

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    SmithForm form;
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_min_to(t, /*row_and_column_only=*/false)) break;
      reduce_pivot(t);
      if (a_(t, t) < 0) negate_row(t);
      form.invariant_factors.push_back(a_(t, t));
    }
    return form;
  }

  IntegerMatrix& left() { return left_; }
  IntegerMatrix& right() { return right_; }

 private:
  // Moves the entry of least nonzero absolute value to (t, t). Searches the
  // whole trailing block, or only row t and column t.
  bool move_min_to(std::size_t t, bool row_and_column_only) {
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    auto consider = [&](std::size_t r, std::size_t c) {
      if (a_(r, c) == 0) return;
      if (!found || mpz_cmpabs(a_(r, c).get_mpz_t(), a_(best_r, best_c).get_mpz_t()) < 0) {
        best_r = r;
        best_c = c;
        found = true;
      }
    };
    if (row_and_column_only) {
      for (std::size_t r = t; r < a_.rows(); ++r) consider(r, t);
      for (std::size_t c = t + 1; c < a_.cols(); ++c) consider(t, c);
    } else {
      for (std::size_t r = t; r < a_.rows(); ++r)
        for (std::size_t c = t; c < a_.cols(); ++c) consider(r, c);
    }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void reduce_pivot(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to(t, /*row_and_column_only=*/true);
        continue;
      }
      // Divisibility: every trailing entry must be a multiple of the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < a_.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, BigInt(1));
            divisible = false;
            break;
          }
      if (divisible) return;
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(k, c));
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c)
        std::swap(left_(i, c), left_(k, c));
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, j), a_(r, k));
    if (track_)
      for (std::size_t r = 0; r < right_.rows(); ++r)
        std::swap(right_(r, j), right_(r, k));
  }

  // row_i += factor * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const BigInt& factor) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) += factor * a_(k, c);
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c)
        left_(i, c) += factor * left_(k, c);
  }

  // col_j += factor * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const BigInt& factor) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, j) += factor * a_(r, k);
    if (track_)
      for (std::size_t r = 0; r < right_.rows(); ++r)
        right_(r, j) += factor * right_(r, k);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (track_)
      for (std::size_t c = 0; c < left_.cols(); ++c) left_(i, c) = -left_(i, c);
  }

  IntegerMatrix a_;
  bool track_;
  IntegerMatrix left_;
  IntegerMatrix right_;
};

}  // namespace

SmithForm smith_normal_form(IntegerMatrix a) {
  return SmithReducer(std::move(a), false).run();
}

SmithDecomposition smith_decomposition(IntegerMatrix a) {
  SmithReducer reducer(std::move(a), true);
  SmithDecomposition out;
  out.form = reducer.run();
  out.left = std::move(reducer.left());
  out.right = std::move(reducer.right());
  return out;
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& a) {
  SmithDecomposition d = smith_decomposition(a);
  const std::size_t n = a.cols();
  const std::size_t k = d.form.rank();
  IntegerMatrix basis(n, n - k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = k; c < n; ++c) basis(r, c - k) = d.right(r, c);
  return basis;
}

bool IncrementalEchelon::push(std::span<const BigInt> v) {
  if (v.size() != dimension_)
    throw std::invalid_argument("IncrementalEchelon::push: dimension mismatch");
  scratch_.assign(v.begin(), v.end());
  BigInt g, a, b;
  for (std::size_t idx : order_) {
    const Row& row = rows_[idx];
    const std::size_t c = row.pivot;
    if (scratch_[c] == 0) continue;
    mpz_gcd(g.get_mpz_t(), row.entries[c].get_mpz_t(), scratch_[c].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), row.entries[c].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), scratch_[c].get_mpz_t(), g.get_mpz_t());
    // Non-pivot columns left of c may be nonzero, so scale the whole vector.
    if (a != 1)
      for (auto& x : scratch_) x *= a;
    for (std::size_t j = c; j < dimension_; ++j)
      if (row.entries[j] != 0) scratch_[j] -= b * row.entries[j];
  }
  std::size_t lead = 0;
  while (lead < dimension_ && scratch_[lead] == 0) ++lead;
  if (lead == dimension_) return false;
  make_primitive(scratch_);
  rows_.push_back(Row{lead, scratch_});
  auto pos = std::find_if(order_.begin(), order_.end(), [&](std::size_t idx) {
    return rows_[idx].pivot > lead;
  });
  order_.insert(pos, rows_.size() - 1);
  return true;
}

void IncrementalEchelon::pop() {
  if (rows_.empty()) throw std::logic_error("IncrementalEchelon::pop: empty");
  const std::size_t last = rows_.size() - 1;
  order_.erase(std::find(order_.begin(), order_.end(), last));
  rows_.pop_back();
}

}  // namespace cyclomat
