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

#ifndef CYCLOMAT_EXACT_LINALG_HPP
#define CYCLOMAT_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclomat {

using BigInt = mpz_class;
// mpq_class keeps the denominator positive and the fraction reduced after
// every arithmetic operation; values built from raw parts go through
// make_rational().
using Rational = mpq_class;

Rational make_rational(const BigInt& numerator, const BigInt& denominator);
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// Dense row-major matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return DenseMatrix();
    DenseMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("DenseMatrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  DenseMatrix select_columns(std::span<const std::size_t> columns) const {
    DenseMatrix m(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < columns.size(); ++k)
        m(r, k) = (*this)(r, columns[k]);
    return m;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<BigInt>;

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: dimension mismatch");
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix to_rational(const IntegerMatrix& m);

// Column rank over Q. Rows are cleared of denominators and reduced with
// fraction-free (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

// Columns form a basis of {x : m x = 0}. Each column is a primitive integer
// vector (stored as rationals).
RationalMatrix kernel_basis(const RationalMatrix& m);

// Pivot columns of a row echelon form of m (a maximal independent set of
// columns, greedily from the left).
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

// Throws std::domain_error when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

// Unique x with a x = b. Throws std::domain_error when `a` lacks full column
// rank or b is outside its column span.
std::vector<Rational> solve_full_column_rank(const RationalMatrix& a,
                                             std::span<const Rational> b);

struct SmithForm {
  // Nonzero invariant factors d_1 | d_2 | ... | d_k, all positive.
  std::vector<BigInt> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  // Product of the factors; the order of the torsion of the cokernel.
  BigInt torsion_order() const;
};

SmithForm smith_normal_form(IntegerMatrix a);

// Smith form with unimodular transforms: left * a * right is diagonal with the
// invariant factors in the leading positions.
struct SmithDecomposition {
  SmithForm form;
  IntegerMatrix left;
  IntegerMatrix right;
};

SmithDecomposition smith_decomposition(IntegerMatrix a);

// Z-basis (as columns) of the lattice {x in Z^n : a x = 0}.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& a);

// Row-echelon basis over Q that supports push/pop of single vectors, used by
// depth-first subset sweeps. Vectors are kept as primitive integer rows.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t dimension) : dimension_(dimension) {}

  // Returns true (and records the vector) iff v is independent of the
  // current rows. Only successful pushes are undone by pop().
  bool push(std::span<const BigInt> v);
  void pop();

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<BigInt> entries;
  };
  std::size_t dimension_;
  std::vector<Row> rows_;            // insertion order
  std::vector<std::size_t> order_;   // indices into rows_, ascending pivot
  std::vector<BigInt> scratch_;
};

}  // namespace cyclomat

#endif  // CYCLOMAT_EXACT_LINALG_HPP
