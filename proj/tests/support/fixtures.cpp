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

#include "support/fixtures.hpp"

namespace fixtures {

using ppd::Elem;
using ppd::Field;
using ppd::FieldPtr;
using ppd::Matrix;

ppd::GroupInput standard(ppd::Family family, unsigned d, std::uint64_t q, ppd::Level level) {
  return ppd::standard_group({family, d, Field::make_of_order(q)}, level);
}

naive::Field naive_field(const FieldPtr& f) { return naive::Field(f->characteristic(), f->degree()); }

naive::Mat to_naive(const Matrix& m) {
  naive::Mat out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  }
  return out;
}

namespace {

std::vector<Elem> coords(Elem x, std::uint32_t p, unsigned k) {
  std::vector<Elem> c(k);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = x % p;
    x /= p;
  }
  return c;
}

Elem basis_elem(std::uint32_t p, unsigned i) {
  Elem x = 1;
  while (i--) x *= p;
  return x;
}

ppd::GroupInput linear_input(const FieldPtr& f, unsigned d, std::vector<Matrix> gens) {
  ppd::GroupInput g;
  g.group_case = {ppd::Family::kLinear, d, f};
  g.generators = std::move(gens);
  return g;
}

}  // namespace

Matrix multiplication_matrix(const FieldPtr& ext, Elem alpha) {
  const std::uint32_t p = ext->characteristic();
  const unsigned k = ext->degree();
  const FieldPtr base = Field::make(p, 1);
  Matrix m(base, k, k);
  for (unsigned i = 0; i < k; ++i) {
    const auto c = coords(ext->mul(basis_elem(p, i), alpha), p, k);
    for (unsigned j = 0; j < k; ++j) m.set(i, j, c[j]);
  }
  return m;
}

Matrix blow_up(const Matrix& a) {
  const FieldPtr& ext = a.field();
  const unsigned k = ext->degree();
  const std::size_t n = a.rows();
  Matrix out(Field::make(ext->characteristic(), 1), n * k, n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix b = multiplication_matrix(ext, a.at(i, j));
      for (unsigned r = 0; r < k; ++r) {
        for (unsigned c = 0; c < k; ++c) out.set(i * k + r, j * k + c, b.at(r, c));
      }
    }
  }
  return out;
}

Matrix frobenius_block(const FieldPtr& ext, unsigned n) {
  const std::uint32_t p = ext->characteristic();
  const unsigned k = ext->degree();
  Matrix out(Field::make(p, 1), n * k, n * k);
  for (unsigned b = 0; b < n; ++b) {
    for (unsigned i = 0; i < k; ++i) {
      const auto c = coords(ext->frobenius(basis_elem(p, i)), p, k);
      for (unsigned j = 0; j < k; ++j) out.set(b * k + i, b * k + j, c[j]);
    }
  }
  return out;
}

ppd::GroupInput extension_field(unsigned n, std::uint64_t p, unsigned k) {
  const FieldPtr ext = Field::make(p, k);
  std::vector<Matrix> gens;
  for (const auto& g : ppd::standard_generators({ppd::Family::kLinear, n, ext}, ppd::Level::kIsometry)) {
    gens.push_back(blow_up(g));
  }
  gens.push_back(frobenius_block(ext, n));
  return linear_input(Field::make(p, 1), n * k, std::move(gens));
}

ppd::GroupInput monomial(unsigned d, std::uint64_t q) {
  const FieldPtr f = Field::make_of_order(q);
  Matrix cycle(f, d, d), swap(f, d, d);
  for (unsigned i = 0; i < d; ++i) cycle.set(i, (i + 1) % d, 1);
  for (unsigned i = 2; i < d; ++i) swap.set(i, i, 1);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  std::vector<Matrix> gens{cycle, swap};
  if (q > 2) {
    Matrix diag = Matrix::identity(f, d);
    diag.set(0, 0, f->primitive_element());
    gens.push_back(diag);
  }
  return linear_input(f, d, std::move(gens));
}

ppd::GroupInput subfield_scalars(unsigned d, std::uint64_t q0, std::uint64_t q) {
  const FieldPtr small = Field::make_of_order(q0);
  const FieldPtr big = Field::make_of_order(q);
  // GF(q0) sits inside GF(q) as the fixed field of x -> x^{q0}; for a prime
  // q0 those are the encodings 0..q0-1.
  if (!small->is_prime_field()) throw std::invalid_argument("subfield fixture needs prime q0");
  std::vector<Matrix> gens;
  for (const auto& g : ppd::standard_generators({ppd::Family::kLinear, d, small}, ppd::Level::kIsometry)) {
    Matrix h(big, d, d);
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = 0; j < d; ++j) h.set(i, j, big->from_int(g.at(i, j)));
    }
    gens.push_back(h);
  }
  gens.push_back(Matrix::scalar(big, d, big->primitive_element()));
  return linear_input(big, d, std::move(gens));
}

ppd::GroupInput reducible(unsigned d, unsigned k, std::uint64_t q) {
  const FieldPtr f = Field::make_of_order(q);
  std::vector<Matrix> gens;
  auto embed = [&](const Matrix& m, unsigned at) {
    Matrix out = Matrix::identity(f, d);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(at + i, at + j, m.at(i, j));
    }
    return out;
  };
  for (const auto& g : ppd::standard_generators({ppd::Family::kLinear, k, f}, ppd::Level::kOmega)) {
    gens.push_back(embed(g, 0));
  }
  for (const auto& g : ppd::standard_generators({ppd::Family::kLinear, d - k, f}, ppd::Level::kOmega)) {
    gens.push_back(embed(g, k));
  }
  // The bottom block acts on the span of e_k..e_{d-1}; this couples it to e_0.
  Matrix u = Matrix::identity(f, d);
  u.set(k, 0, 1);
  gens.push_back(u);
  return linear_input(f, d, std::move(gens));
}

ppd::GroupInput deleted_permutation(unsigned n) {
  const FieldPtr f = Field::make(2, 1);
  const unsigned d = n - 1;
  // Basis e_i + e_{n-1}; a sum-zero vector has coordinates its first n-1 entries.
  auto act = [&](const std::vector<unsigned>& perm) {
    Matrix m(f, d, d);
    for (unsigned i = 0; i < d; ++i) {
      std::vector<Elem> v(n, 0);
      v[perm[i]] ^= 1;
      v[perm[n - 1]] ^= 1;
      for (unsigned j = 0; j < d; ++j) m.set(i, j, v[j]);
    }
    return m;
  };
  std::vector<unsigned> cycle(n), swap(n);
  for (unsigned i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  return linear_input(f, d, {act(cycle), act(swap)});
}

std::vector<Named> negative_fixtures() {
  return {
      {"GL(2,9).2 < GL(4,3)", extension_field(2, 3, 2)},
      {"GL(1,2) wr S5 < GL(5,2)", monomial(5, 2)},
      {"GL(4,2).scalars < GL(4,4)", subfield_scalars(4, 2, 4)},
      {"reducible block group < GL(6,3)", reducible(6, 3, 3)},
      {"GL(4,4).2 < GL(8,2)", extension_field(4, 2, 2)},
      {"GL(5,4).2 < GL(10,2)", extension_field(5, 2, 2)},
      {"S13 on its deleted permutation module", deleted_permutation(13)},
  };
}

}  // namespace fixtures
