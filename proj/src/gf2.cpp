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

#include "gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace ppd::gf2 {

namespace {

// dst ^= src << shift (bits).
void xor_shifted(std::vector<Word>* dst, const std::vector<Word>& src, std::size_t shift) {
  const std::size_t ws = shift / 64;
  const unsigned bs = shift % 64;
  const std::size_t need = src.size() + ws + 1;
  if (dst->size() < need) dst->resize(need, 0);
  Word* d = dst->data() + ws;
  if (bs == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) d[i] ^= src[i];
  } else {
    Word carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      d[i] ^= (src[i] << bs) | carry;
      carry = src[i] >> (64 - bs);
    }
    d[src.size()] ^= carry;
  }
}

// Spreads the 32 bits of x to the even positions of a 64-bit word.
Word spread(std::uint32_t x) {
  Word v = x;
  v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
  v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
  v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

BitPoly one() {
  BitPoly p;
  p.w = {1};
  return p;
}

BitPoly variable() {
  BitPoly p;
  p.w = {2};
  return p;
}

// Even-indexed coefficients: f(t) = g(t^2) -> g, which over GF(2) is sqrt(f).
BitPoly even_part(const BitPoly& f) {
  BitPoly g;
  const int n = f.degree();
  if (n < 0) return g;
  g.w.assign(words_for(n / 2 + 1), 0);
  for (int i = 0; i <= n; i += 2) {
    if (f.bit(i)) g.flip(i / 2);
  }
  g.trim();
  return g;
}

BitPoly derivative(const BitPoly& f) {
  BitPoly d;
  d.w.assign(f.w.size(), 0);
  const Word odd = 0xAAAAAAAAAAAAAAAAULL;
  for (std::size_t i = 0; i < f.w.size(); ++i) {
    Word x = f.w[i] & odd;
    d.w[i] |= x >> 1;
  }
  d.trim();
  return d;
}

}  // namespace

int BitPoly::degree() const {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) return static_cast<int>(i * 64 + 63 - std::countl_zero(w[i]));
  }
  return -1;
}

void BitPoly::flip(std::size_t i) {
  if (i / 64 >= w.size()) w.resize(i / 64 + 1, 0);
  w[i / 64] ^= Word{1} << (i % 64);
}

void BitPoly::trim() {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

BitPoly from_poly(const Poly& f) {
  BitPoly b;
  b.w.assign(words_for(f.coeffs().size()), 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i]) b.w[i / 64] |= Word{1} << (i % 64);
  }
  b.trim();
  return b;
}

Poly to_poly(const BitPoly& f, const FieldPtr& field) {
  const int n = f.degree();
  std::vector<Elem> c(n + 1, 0);
  for (int i = 0; i <= n; ++i) c[i] = f.bit(i) ? 1 : 0;
  return Poly(field, std::move(c));
}

BitPoly add(const BitPoly& a, const BitPoly& b) {
  BitPoly r;
  r.w = a.w.size() >= b.w.size() ? a.w : b.w;
  const auto& s = a.w.size() >= b.w.size() ? b.w : a.w;
  for (std::size_t i = 0; i < s.size(); ++i) r.w[i] ^= s[i];
  r.trim();
  return r;
}

BitPoly mul(const BitPoly& a, const BitPoly& b) {
  BitPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.w.assign(a.w.size() + b.w.size() + 1, 0);
  // Shifted copies of b for the 64 bit offsets would be faster; the plain
  // loop is fast enough for the degrees that occur here.
  for (std::size_t i = 0; i < a.w.size(); ++i) {
    Word x = a.w[i];
    while (x != 0) {
      unsigned k = std::countr_zero(x);
      x &= x - 1;
      xor_shifted(&r.w, b.w, i * 64 + k);
    }
  }
  r.trim();
  return r;
}

BitPoly square(const BitPoly& a) {
  BitPoly r;
  r.w.assign(2 * a.w.size(), 0);
  for (std::size_t i = 0; i < a.w.size(); ++i) {
    r.w[2 * i] = spread(static_cast<std::uint32_t>(a.w[i]));
    r.w[2 * i + 1] = spread(static_cast<std::uint32_t>(a.w[i] >> 32));
  }
  r.trim();
  return r;
}

void divmod(const BitPoly& a, const BitPoly& b, BitPoly* q, BitPoly* r) {
  const int db = b.degree();
  if (db < 0) throw Error(ErrorCode::kZeroModulus, "division by the zero polynomial");
  BitPoly rem = a;
  BitPoly quo;
  int da = rem.degree();
  if (da >= db) quo.w.assign(words_for(da - db + 1), 0);
  for (int k = da; k >= db; --k) {
    if (!rem.bit(k)) continue;
    quo.flip(k - db);
    xor_shifted(&rem.w, b.w, k - db);
  }
  rem.trim();
  quo.trim();
  if (q != nullptr) *q = std::move(quo);
  if (r != nullptr) *r = std::move(rem);
}

BitPoly mod(const BitPoly& a, const BitPoly& m) {
  BitPoly r;
  divmod(a, m, nullptr, &r);
  return r;
}

BitPoly gcd(BitPoly a, BitPoly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    BitPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BitPoly powmod(const BitPoly& base, const BigInt& exponent, const BitPoly& m) {
  BitPoly b = mod(base, m);
  BitPoly result = mod(one(), m);
  const std::size_t bits = bit_length(exponent);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(square(result), m);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mod(mul(result, b), m);
  }
  return result;
}

BitPoly squarefree_part(const BitPoly& f) {
  if (f.degree() < 1) return f;
  BitPoly df = derivative(f);
  if (df.is_zero()) return squarefree_part(even_part(f));
  BitPoly g = gcd(f, df);
  BitPoly w;
  divmod(f, g, &w, nullptr);
  for (BitPoly c = gcd(g, w); c.degree() > 0; c = gcd(g, w)) divmod(g, c, &g, nullptr);
  if (g.degree() < 1) return w;
  return mul(w, squarefree_part(even_part(g)));
}

std::vector<std::pair<unsigned, BitPoly>> sfdd(const BitPoly& f) {
  std::vector<std::pair<unsigned, BitPoly>> out;
  BitPoly rem = squarefree_part(f);
  const BitPoly t = variable();
  BitPoly h = mod(t, rem);
  for (unsigned m = 1; rem.degree() >= 2 * static_cast<int>(m); ++m) {
    h = mod(square(h), rem);
    BitPoly g = gcd(rem, add(h, t));
    if (g.degree() > 0) {
      divmod(rem, g, &rem, nullptr);
      h = mod(h, rem);
      out.emplace_back(m, std::move(g));
    }
  }
  if (rem.degree() > 0) out.emplace_back(static_cast<unsigned>(rem.degree()), rem);
  return out;
}

BitMatrix from_matrix(const Matrix& a) {
  BitMatrix b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Elem* r = a.row(i);
    Word* out = b.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (r[j]) out[j / 64] |= Word{1} << (j % 64);
    }
  }
  return b;
}

Matrix to_matrix(const BitMatrix& a, const FieldPtr& field) {
  Matrix m(field, a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Elem* r = m.row(i);
    for (std::size_t j = 0; j < a.cols; ++j) r[j] = a.get(i, j) ? 1 : 0;
  }
  return m;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix c(a.rows, b.cols);
  const std::size_t s = b.stride;
  for (std::size_t i = 0; i < a.rows; ++i) {
    const Word* ar = a.row(i);
    Word* cr = c.row(i);
    for (std::size_t w = 0; w < a.stride; ++w) {
      Word x = ar[w];
      while (x != 0) {
        std::size_t k = w * 64 + std::countr_zero(x);
        x &= x - 1;
        const Word* br = b.row(k);
        for (std::size_t j = 0; j < s; ++j) cr[j] ^= br[j];
      }
    }
  }
  return c;
}

namespace {

void xor_row(Word* dst, const Word* src, std::size_t stride) {
  for (std::size_t j = 0; j < stride; ++j) dst[j] ^= src[j];
}

void swap_rows(BitMatrix* a, std::size_t i, std::size_t k) {
  if (i == k) return;
  std::swap_ranges(a->row(i), a->row(i) + a->stride, a->row(k));
}

}  // namespace

bool inverse(const BitMatrix& a, BitMatrix* out) {
  const std::size_t n = a.rows;
  BitMatrix m = a;
  BitMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv.set(i, i, true);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && !m.get(r, c)) ++r;
    if (r == n) return false;
    swap_rows(&m, r, c);
    swap_rows(&inv, r, c);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c && m.get(k, c)) {
        xor_row(m.row(k), m.row(c), m.stride);
        xor_row(inv.row(k), inv.row(c), inv.stride);
      }
    }
  }
  *out = std::move(inv);
  return true;
}

BitPoly charpoly(const BitMatrix& a) {
  const std::size_t n = a.rows;
  BitMatrix h = a;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && !h.get(i, j)) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      swap_rows(&h, i, j + 1);
      for (std::size_t r = 0; r < n; ++r) {
        bool x = h.get(r, i), y = h.get(r, j + 1);
        if (x != y) {
          h.set(r, i, y);
          h.set(r, j + 1, x);
        }
      }
    }
    std::vector<Word> mask(h.stride, 0);
    bool any = false;
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h.get(k, j)) {
        xor_row(h.row(k), h.row(j + 1), h.stride);
        mask[k / 64] |= Word{1} << (k % 64);
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Word* row = h.row(r);
      unsigned parity = 0;
      for (std::size_t w = 0; w < h.stride; ++w) parity ^= std::popcount(row[w] & mask[w]) & 1;
      if (parity) h.row(r)[(j + 1) / 64] ^= Word{1} << ((j + 1) % 64);
    }
  }

  // p_m = (t + h_mm) p_{m-1} + sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}.
  std::vector<BitPoly> p(n + 1);
  p[0] = one();
  for (std::size_t m = 1; m <= n; ++m) {
    BitPoly next;
    next.w.assign(words_for(m + 1), 0);
    const BitPoly& prev = p[m - 1];
    xor_shifted(&next.w, prev.w, 1);
    if (h.get(m - 1, m - 1)) xor_shifted(&next.w, prev.w, 0);
    for (std::size_t i = m - 1; i >= 1; --i) {
      if (!h.get(i, i - 1)) break;
      if (h.get(i - 1, m - 1)) xor_shifted(&next.w, p[i - 1].w, 0);
    }
    next.trim();
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<std::size_t> rref(BitMatrix* a) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a->cols && pr < a->rows; ++c) {
    std::size_t r = pr;
    while (r < a->rows && !a->get(r, c)) ++r;
    if (r == a->rows) continue;
    swap_rows(a, r, pr);
    for (std::size_t k = 0; k < a->rows; ++k) {
      if (k != pr && a->get(k, c)) xor_row(a->row(k), a->row(pr), a->stride);
    }
    pivots.push_back(c);
    ++pr;
  }
  a->rows = pr;
  a->data.resize(pr * a->stride);
  return pivots;
}

BitMatrix transpose(const BitMatrix& a) {
  BitMatrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (a.get(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

BitMatrix right_kernel(const BitMatrix& a) {
  BitMatrix r = a;
  auto pivots = rref(&r);
  std::vector<char> is_pivot(a.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  BitMatrix k(free_cols.size(), a.cols);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k.set(f, free_cols[f], true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (r.get(i, free_cols[f])) k.set(f, pivots[i], true);
    }
  }
  rref(&k);
  return k;
}

BitMatrix poly_eval(const BitPoly& h, const BitMatrix& a) {
  const std::size_t n = a.rows;
  BitMatrix r(n, n);
  for (int i = h.degree(); i >= 0; --i) {
    r = mul(r, a);
    if (h.bit(i)) {
      for (std::size_t k = 0; k < n; ++k) r.row(k)[k / 64] ^= Word{1} << (k % 64);
    }
  }
  return r;
}

namespace {

// Semi-echelon basis: each row is reduced against all earlier rows and its
// pivot is its lowest set bit.
class SemiEchelon {
 public:
  explicit SemiEchelon(std::size_t cols) : cols_(cols), stride_(words_for(cols)) {}

  bool insert(std::vector<Word>* v) {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      std::size_t p = pivots_[i];
      if (((*v)[p / 64] >> (p % 64)) & 1) xor_row(v->data(), rows_.data() + i * stride_, stride_);
    }
    for (std::size_t w = 0; w < stride_; ++w) {
      if ((*v)[w] != 0) {
        pivots_.push_back(w * 64 + std::countr_zero((*v)[w]));
        rows_.insert(rows_.end(), v->begin(), v->end());
        return true;
      }
    }
    return false;
  }

  std::size_t size() const { return pivots_.size(); }
  const Word* row(std::size_t i) const { return rows_.data() + i * stride_; }

  BitMatrix matrix() const {
    BitMatrix m(pivots_.size(), cols_);
    m.data = rows_;
    rref(&m);
    return m;
  }

 private:
  std::size_t cols_;
  std::size_t stride_;
  std::vector<Word> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

BitMatrix spin(const BitMatrix& seeds, const std::vector<BitMatrix>& gens) {
  const std::size_t n = seeds.cols;
  const std::size_t stride = words_for(n);
  SemiEchelon basis(n);
  for (std::size_t i = 0; i < seeds.rows; ++i) {
    std::vector<Word> v(seeds.row(i), seeds.row(i) + stride);
    basis.insert(&v);
  }
  std::vector<Word> img(stride);
  for (std::size_t next = 0; next < basis.size() && basis.size() < n; ++next) {
    for (const auto& g : gens) {
      std::fill(img.begin(), img.end(), 0);
      const Word* v = basis.row(next);
      for (std::size_t w = 0; w < stride; ++w) {
        Word x = v[w];
        while (x != 0) {
          std::size_t k = w * 64 + std::countr_zero(x);
          x &= x - 1;
          xor_row(img.data(), g.row(k), stride);
        }
      }
      basis.insert(&img);
      if (basis.size() == n) break;
    }
  }
  return basis.matrix();
}

}  // namespace ppd::gf2
