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

#include "ppd/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "gf2.hpp"

namespace ppd {

namespace {

bool use_gf2(const FieldPtr& f) { return f->order() == 2; }

void check_compatible(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
}

void check_square(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
}

// row_dst += c * row_src over n entries.
void axpy(const Field& f, Elem c, const Elem* src, Elem* dst, std::size_t n) {
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(dst[j], src[j]);
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (src[j] != 0) dst[j] = f.mul_add(c, src[j], dst[j]);
  }
}

void swap_rows(Matrix* a, std::size_t i, std::size_t k) {
  if (i == k) return;
  std::swap_ranges(a->row(i), a->row(i) + a->cols(), a->row(k));
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

Matrix Matrix::scalar(FieldPtr field, std::size_t n, Elem c) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!field->contains(rows[i][j])) throw Error(ErrorCode::kInvalidArgument, "entry out of range");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Matrix Matrix::companion(const Poly& f) {
  if (f.degree() < 1 || f.leading() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "companion matrix needs a monic polynomial");
  }
  const std::size_t n = f.degree();
  const Field& fld = *f.field();
  Matrix m(f.field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, 1);
  for (std::size_t j = 0; j < n; ++j) m.set(n - 1, j, fld.neg(f.coeff(j)));
  return m;
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_compatible(a, b);
  if (a.cols() != b.rows()) throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  if (use_gf2(a.field()) && a.rows() >= 16) {
    return gf2::to_matrix(gf2::mul(gf2::from_matrix(a), gf2::from_matrix(b)), a.field());
  }
  const Field& f = *a.field();
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Elem* ar = a.row(i);
    Elem* cr = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) axpy(f, ar[k], b.row(k), cr, b.cols());
  }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  check_compatible(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "shapes differ");
  }
  const Field& f = *a.field();
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(f, 1, b.row(i), c.row(i), a.cols());
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  return mat_add(a, mat_scale(b, a.field()->neg(1)));
}

Matrix mat_scale(const Matrix& a, Elem c) {
  const Field& f = *a.field();
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem* r = m.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = f.mul(r[j], c);
  }
  return m;
}

Matrix mat_transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a.at(i, j));
  }
  return t;
}

Matrix mat_inverse(const Matrix& a) {
  check_square(a);
  const std::size_t n = a.rows();
  if (use_gf2(a.field()) && n >= 16) {
    gf2::BitMatrix out;
    if (!gf2::inverse(gf2::from_matrix(a), &out)) throw Error(ErrorCode::kSingular, "matrix is singular");
    return gf2::to_matrix(out, a.field());
  }
  const Field& f = *a.field();
  Matrix m = a;
  Matrix inv = Matrix::identity(a.field(), n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m.at(r, c) == 0) ++r;
    if (r == n) throw Error(ErrorCode::kSingular, "matrix is singular");
    swap_rows(&m, r, c);
    swap_rows(&inv, r, c);
    const Elem s = f.inv(m.at(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m.row(c)[j] = f.mul(m.row(c)[j], s);
      inv.row(c)[j] = f.mul(inv.row(c)[j], s);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || m.at(k, c) == 0) continue;
      const Elem nc = f.neg(m.at(k, c));
      axpy(f, nc, m.row(c), m.row(k), n);
      axpy(f, nc, inv.row(c), inv.row(k), n);
    }
  }
  return inv;
}

Matrix mat_pow(const Matrix& a, const BigInt& n) {
  check_square(a);
  if (n < 0) return mat_pow(mat_inverse(a), -n);
  Matrix result = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = bit_length(n); i-- > 0;) {
    result = mat_mul(result, result);
    if (mpz_tstbit(n.get_mpz_t(), i)) result = mat_mul(result, a);
  }
  return result;
}

Elem mat_det(const Matrix& a) {
  check_square(a);
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m.at(r, c) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      swap_rows(&m, r, c);
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    const Elem s = f.inv(m.at(c, c));
    for (std::size_t k = c + 1; k < n; ++k) {
      if (m.at(k, c) == 0) continue;
      axpy(f, f.neg(f.mul(m.at(k, c), s)), m.row(c), m.row(k), n);
    }
  }
  return det;
}

std::vector<std::size_t> rref(Matrix* a) {
  const Field& f = *a->field();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  const std::size_t rows = a->rows(), cols = a->cols();
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t r = pr;
    while (r < rows && a->at(r, c) == 0) ++r;
    if (r == rows) continue;
    swap_rows(a, r, pr);
    const Elem s = f.inv(a->at(pr, c));
    Elem* prow = a->row(pr);
    for (std::size_t j = 0; j < cols; ++j) prow[j] = f.mul(prow[j], s);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == pr || a->at(k, c) == 0) continue;
      axpy(f, f.neg(a->at(k, c)), prow, a->row(k), cols);
    }
    pivots.push_back(c);
    ++pr;
  }
  Matrix trimmed(a->field(), pr, cols);
  std::copy(a->row(0), a->row(0) + pr * cols, trimmed.row(0));
  *a = std::move(trimmed);
  return pivots;
}

std::size_t mat_rank(const Matrix& a) {
  if (use_gf2(a.field())) {
    gf2::BitMatrix b = gf2::from_matrix(a);
    return gf2::rref(&b).size();
  }
  Matrix m = a;
  return rref(&m).size();
}

Matrix right_nullspace(const Matrix& a) {
  if (use_gf2(a.field())) {
    return gf2::to_matrix(gf2::right_kernel(gf2::from_matrix(a)), a.field());
  }
  const Field& f = *a.field();
  Matrix r = a;
  auto pivots = rref(&r);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(a.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r.at(i, c));
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(a.field(), 0, a.cols());
  Matrix k = Matrix::from_rows(a.field(), basis);
  rref(&k);
  return k;
}

Matrix mat_nullspace(const Matrix& a) { return right_nullspace(mat_transpose(a)); }

Matrix mat_commutator(const Matrix& a, const Matrix& b) {
  return mat_mul(mat_mul(mat_inverse(a), mat_inverse(b)), mat_mul(a, b));
}

// Reduce to upper Hessenberg form by similarity, then expand det(tI - H)
// along the recurrence on leading principal minors.
Poly mat_charpoly(const Matrix& a) {
  check_square(a);
  if (use_gf2(a.field())) return gf2::to_poly(gf2::charpoly(gf2::from_matrix(a)), a.field());
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h.at(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      swap_rows(&h, i, j + 1);
      for (std::size_t r = 0; r < n; ++r) {
        Elem* row = h.row(r);
        std::swap(row[i], row[j + 1]);
      }
    }
    const Elem pinv = f.inv(h.at(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h.at(k, j) == 0) continue;
      const Elem c = f.mul(h.at(k, j), pinv);
      // row_k -= c row_{j+1}; col_{j+1} += c col_k.
      axpy(f, f.neg(c), h.row(j + 1), h.row(k), n);
      for (std::size_t r = 0; r < n; ++r) {
        Elem* row = h.row(r);
        if (row[k] != 0) row[j + 1] = f.mul_add(c, row[k], row[j + 1]);
      }
    }
  }

  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Elem> next(m + 1, 0);
    const auto& prev = p[m - 1];
    const Elem hmm = f.neg(h.at(m - 1, m - 1));
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], prev[k]);
      next[k] = f.mul_add(hmm, prev[k], next[k]);
    }
    Elem prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h.at(i, i - 1));
      if (prod == 0) break;
      const Elem c = f.neg(f.mul(h.at(i - 1, m - 1), prod));
      if (c == 0) continue;
      for (std::size_t k = 0; k < p[i - 1].size(); ++k) next[k] = f.mul_add(c, p[i - 1][k], next[k]);
    }
    p[m] = std::move(next);
  }
  return Poly(a.field(), std::move(p[n]));
}

Matrix mat_poly_eval(const Poly& h, const Matrix& a) {
  check_square(a);
  if (h.field() != a.field()) throw Error(ErrorCode::kFieldMismatch, "polynomial and matrix fields differ");
  if (use_gf2(a.field()) && a.rows() >= 16) {
    return gf2::to_matrix(gf2::poly_eval(gf2::from_poly(h), gf2::from_matrix(a)), a.field());
  }
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  Matrix r(a.field(), n, n);
  for (int i = h.degree(); i >= 0; --i) {
    r = mat_mul(r, a);
    const Elem c = h.coeff(i);
    if (c != 0) {
      for (std::size_t k = 0; k < n; ++k) r.set(k, k, f.add(r.at(k, k), c));
    }
  }
  return r;
}

Vec vec_mat_mul(const Vec& v, const Matrix& a) {
  if (v.size() != a.rows()) throw Error(ErrorCode::kDimensionMismatch, "vector length differs");
  const Field& f = *a.field();
  Vec out(a.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) axpy(f, v[k], a.row(k), out.data(), a.cols());
  return out;
}

void EchelonBasis::reduce(Vec* v) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = (*v)[pivots_[i]];
    if (c != 0) axpy(f, f.neg(c), rows_[i].data(), v->data(), dim_);
  }
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "vector length differs");
  reduce(&v);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j] == 0) continue;
    const Field& f = *field_;
    const Elem s = f.inv(v[j]);
    for (auto& x : v) x = f.mul(x, s);
    rows_.push_back(std::move(v));
    pivots_.push_back(j);
    return true;
  }
  return false;
}

bool EchelonBasis::contains(Vec v) const {
  reduce(&v);
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Matrix EchelonBasis::matrix() const {
  if (rows_.empty()) return Matrix(field_, 0, dim_);
  Matrix m = Matrix::from_rows(field_, rows_);
  rref(&m);
  return m;
}

Matrix spin(const Matrix& seeds, const std::vector<Matrix>& gens) {
  if (use_gf2(seeds.field())) {
    std::vector<gf2::BitMatrix> g;
    g.reserve(gens.size());
    for (const auto& m : gens) g.push_back(gf2::from_matrix(m));
    return gf2::to_matrix(gf2::spin(gf2::from_matrix(seeds), g), seeds.field());
  }
  const std::size_t n = seeds.cols();
  EchelonBasis basis(seeds.field(), n);
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < seeds.rows(); ++i) {
    Vec v = seeds.row_vec(i);
    if (basis.insert(v)) queue.push_back(std::move(v));
  }
  for (std::size_t next = 0; next < queue.size() && basis.size() < n; ++next) {
    for (const auto& g : gens) {
      Vec w = vec_mat_mul(queue[next], g);
      if (basis.insert(w)) queue.push_back(std::move(w));
      if (basis.size() == n) break;
    }
  }
  return basis.matrix();
}

std::string format_matrix(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) os << ' ';
      os << a.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ppd
