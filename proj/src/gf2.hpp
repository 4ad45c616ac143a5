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

// Bit-packed kernels for GF(2). Internal: the public Poly/Matrix entry points
// convert and dispatch here when the field is GF(2).

#ifndef PPD_SRC_GF2_HPP
#define PPD_SRC_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ppd/bigint.hpp"
#include "ppd/matrix.hpp"
#include "ppd/poly.hpp"

namespace ppd::gf2 {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Polynomial over GF(2); bit i of the word vector is the coefficient of t^i.
struct BitPoly {
  std::vector<Word> w;

  int degree() const;
  bool is_zero() const { return degree() < 0; }
  bool bit(std::size_t i) const { return i / 64 < w.size() && ((w[i / 64] >> (i % 64)) & 1); }
  void flip(std::size_t i);
  void trim();
};

BitPoly from_poly(const Poly& f);
Poly to_poly(const BitPoly& f, const FieldPtr& field);

BitPoly add(const BitPoly& a, const BitPoly& b);
BitPoly mul(const BitPoly& a, const BitPoly& b);
BitPoly square(const BitPoly& a);
BitPoly mod(const BitPoly& a, const BitPoly& m);
void divmod(const BitPoly& a, const BitPoly& b, BitPoly* q, BitPoly* r);
BitPoly gcd(BitPoly a, BitPoly b);
BitPoly powmod(const BitPoly& base, const BigInt& exponent, const BitPoly& m);
BitPoly squarefree_part(const BitPoly& f);
std::vector<std::pair<unsigned, BitPoly>> sfdd(const BitPoly& f);

// Dense bit matrix, rows packed into `stride` words.
struct BitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t stride = 0;
  std::vector<Word> data;

  BitMatrix() = default;
  BitMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), stride(words_for(c)), data(r * words_for(c), 0) {}

  Word* row(std::size_t i) { return data.data() + i * stride; }
  const Word* row(std::size_t i) const { return data.data() + i * stride; }
  bool get(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1; }
  void set(std::size_t i, std::size_t j, bool v) {
    Word m = Word{1} << (j % 64);
    if (v) {
      row(i)[j / 64] |= m;
    } else {
      row(i)[j / 64] &= ~m;
    }
  }
};

BitMatrix from_matrix(const Matrix& a);
Matrix to_matrix(const BitMatrix& a, const FieldPtr& field);

BitMatrix mul(const BitMatrix& a, const BitMatrix& b);
// Returns false if singular.
bool inverse(const BitMatrix& a, BitMatrix* out);
BitPoly charpoly(const BitMatrix& a);
// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(BitMatrix* a);
BitMatrix transpose(const BitMatrix& a);
// Basis of {x : a x^T = 0} in reduced row echelon form.
BitMatrix right_kernel(const BitMatrix& a);
// Evaluate h(a) for a square matrix.
BitMatrix poly_eval(const BitPoly& h, const BitMatrix& a);
// Basis (echelon rows) of the smallest subspace containing `seeds` and closed
// under right multiplication by every matrix in `gens`.
BitMatrix spin(const BitMatrix& seeds, const std::vector<BitMatrix>& gens);

}  // namespace ppd::gf2

#endif  // PPD_SRC_GF2_HPP
