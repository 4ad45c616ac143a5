// Copyright 2026 The ppdrec Authors
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

#ifndef PPD_MATRIX_HPP
#define PPD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ppd/bigint.hpp"
#include "ppd/field.hpp"
#include "ppd/poly.hpp"

namespace ppd {

using Vec = std::vector<Elem>;

// Dense row-major matrix over GF(q). Group elements are square; vectors are
// rows and act on the right (v -> v * g). Rectangular shapes are used for
// subspace bases and linear systems.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t n) : Matrix(std::move(field), n, n) {}

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix scalar(FieldPtr field, std::size_t n, Elem c);
  static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows);
  // Companion matrix of a monic f, in the row convention: rows e_i -> e_{i+1},
  // last row minus the low coefficients of f. Its characteristic polynomial is f.
  static Matrix companion(const Poly& f);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::size_t dim() const noexcept { return rows_; }

  Elem at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem v) noexcept { data_[i * cols_ + j] = v; }
  Elem* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Elem* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }
  Vec row_vec(std::size_t i) const { return Vec(row(i), row(i) + cols_); }
  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_identity() const noexcept;
  bool is_zero() const noexcept;

  bool operator==(const Matrix& o) const noexcept {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const noexcept { return !(*this == o); }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, Elem c);
Matrix mat_transpose(const Matrix& a);
Matrix mat_inverse(const Matrix& a);
Matrix mat_pow(const Matrix& a, const BigInt& n);
Elem mat_det(const Matrix& a);
std::size_t mat_rank(const Matrix& a);
// Commutator a^-1 b^-1 a b.
Matrix mat_commutator(const Matrix& a, const Matrix& b);

Poly mat_charpoly(const Matrix& a);
// h(a) by Horner's rule.
Matrix mat_poly_eval(const Poly& h, const Matrix& a);

// In-place reduced row echelon form with increasing pivot columns; returns
// the pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Matrix* a);

// Basis of {v : v * a = 0}, fully reduced echelon rows.
Matrix mat_nullspace(const Matrix& a);
// Basis of {x : a * x^T = 0}, fully reduced echelon rows.
Matrix right_nullspace(const Matrix& a);

Vec vec_mat_mul(const Vec& v, const Matrix& a);

// Row space basis kept in reduced echelon form under insertion.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  // Reduces v against the basis; true (and v added) if independent.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  Matrix matrix() const;

 private:
  void reduce(Vec* v) const;

  FieldPtr field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Smallest subspace containing the rows of `seeds` and invariant under
// v -> v * g for every g in gens, as echelon rows.
Matrix spin(const Matrix& seeds, const std::vector<Matrix>& gens);

std::string format_matrix(const Matrix& a);

}  // namespace ppd

#endif  // PPD_MATRIX_HPP
