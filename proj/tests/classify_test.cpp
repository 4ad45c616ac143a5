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

#include <random>

#include <gtest/gtest.h>

#include "ppd/classify.hpp"
#include "ppd/oracle.hpp"
#include "ppd/sampler.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using ppd::Elem;
using ppd::Family;
using ppd::Field;
using ppd::FieldPtr;
using ppd::Matrix;
using ppd::Poly;

// Minimal polynomial over GF(p) of an element of GF(p^k).
Poly minimal_polynomial(const FieldPtr& ext, Elem alpha) {
  const FieldPtr base = Field::make(ext->characteristic(), 1);
  Poly m = Poly::constant(ext, 1);
  Elem conj = alpha;
  do {
    m = m * Poly(ext, {ext->neg(conj), 1});
    conj = ext->frobenius(conj);
  } while (conj != alpha);
  std::vector<Elem> c(m.coeffs());
  for (Elem x : c) EXPECT_LT(x, ext->characteristic());
  return Poly(base, c);
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.rows() + b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) m.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) m.set(a.rows() + i, a.rows() + j, b.at(i, j));
  return m;
}

void expect_matches_order_oracle(const Matrix& g) {
  const auto f = g.field();
  const auto ref = fixtures::naive_field(f);
  const std::uint64_t order = naive::element_order(ref, fixtures::to_naive(g));
  ASSERT_GT(order, 0u);
  const auto expected = naive::classify_by_order(order, static_cast<unsigned>(g.rows()), f->characteristic(), f->degree());
  const auto got = ppd::classify_element(g);
  ASSERT_EQ(got.has_value(), expected.has_value()) << ppd::format_matrix(g) << "order " << order;
  if (!got) return;
  EXPECT_EQ(got->e, expected->e);
  EXPECT_EQ(got->is_large, expected->large) << "order " << order;
  EXPECT_EQ(got->is_basic, expected->basic) << "order " << order;
  EXPECT_EQ(got->factor.degree(), static_cast<int>(got->e));
  EXPECT_TRUE((ppd::mat_charpoly(g) % got->factor).is_zero());
  EXPECT_TRUE(ppd::is_irreducible(got->factor));
}

TEST(Classify, Examples) {
  const auto f2 = Field::make(2, 1);
  EXPECT_FALSE(ppd::classify_element(Matrix::identity(f2, 4)).has_value());
  const auto w = ppd::classify_element(Matrix::companion(Poly(f2, {1, 1, 0, 1})));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->e, 3u);
  EXPECT_TRUE(w->is_large);
  EXPECT_TRUE(w->is_basic);
  EXPECT_EQ(ppd::format_witness(w), "e=3 ppd=true large=true basic=true factor=1 1 0 1");
  EXPECT_EQ(ppd::format_witness(std::nullopt), "none");
  // t^6 + t^3 + 1 is irreducible of order 9; 2^6 - 1 has no ppd.
  EXPECT_FALSE(ppd::classify_element(Matrix::companion(Poly(f2, {1, 0, 0, 1, 0, 0, 1}))).has_value());
}

TEST(Classify, LargeClauseForEPlusOne) {
  // Over GF(7), e = 4: the only ppd is 5 = e + 1 and 25 | 7^4 - 1.
  const auto ext = Field::make(7, 4);
  const Elem g = ext->primitive_element();
  const Elem order25 = ext->pow(g, 2400 / 25);
  const Elem order5 = ext->pow(g, 2400 / 5);
  const Poly f25 = minimal_polynomial(ext, order25);
  const Poly f5 = minimal_polynomial(ext, order5);
  ASSERT_EQ(f25.degree(), 4);
  ASSERT_EQ(f5.degree(), 4);
  const auto w25 = ppd::classify_element(Matrix::companion(f25));
  const auto w5 = ppd::classify_element(Matrix::companion(f5));
  ASSERT_TRUE(w25 && w5);
  EXPECT_TRUE(w25->is_large);
  EXPECT_FALSE(w5->is_large);
  EXPECT_TRUE(w5->is_basic);
  expect_matches_order_oracle(Matrix::companion(f25));
  expect_matches_order_oracle(Matrix::companion(f5));
}

TEST(Classify, BasicFailsWhenPhiBasicIsOne) {
  // q = 4, e = 3: 7 is primitive for 4^3 - 1 but not for 2^6 - 1.
  const auto ext = Field::make(2, 6);
  const auto f4 = Field::make_of_order(4);
  std::mt19937_64 rng(2);
  int found = 0;
  for (int trial = 0; trial < 400 && found < 5; ++trial) {
    std::vector<Elem> c{static_cast<Elem>(1 + rng() % 3), static_cast<Elem>(rng() % 4),
                        static_cast<Elem>(rng() % 4), 1};
    const Poly f(f4, c);
    if (!ppd::is_irreducible(f)) continue;
    const auto w = ppd::classify_element(Matrix::companion(f));
    if (!w) continue;
    ++found;
    EXPECT_FALSE(w->is_basic);
    expect_matches_order_oracle(Matrix::companion(f));
  }
  EXPECT_GT(found, 0);
  (void)ext;
}

TEST(Classify, SingularInput) {
  const auto f3 = Field::make(3, 1);
  try {
    ppd::classify_element(Matrix(f3, 3, 3));
    FAIL();
  } catch (const ppd::Error& e) {
    EXPECT_EQ(e.code(), ppd::ErrorCode::kSingularInput);
  }
}

TEST(Classify, OracleEquivalenceOnSmallGroups) {
  for (auto [d, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{3, 2}, {2, 4}, {2, 5}, {2, 3}}) {
    const auto g = fixtures::standard(Family::kLinear, d, q, ppd::Level::kIsometry);
    const auto group = ppd::enumerate(g.generators);
    group.for_each([](const Matrix& m) { expect_matches_order_oracle(m); });
  }
}

TEST(Classify, OracleEquivalenceOnSampledElements) {
  for (auto [d, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{4, 2}, {4, 3}, {5, 2}, {3, 4}, {4, 5}}) {
    const auto g = fixtures::standard(Family::kLinear, d, q, ppd::Level::kIsometry);
    ppd::Sampler s(g.generators, 17 + d + q);
    for (int i = 0; i < 150; ++i) expect_matches_order_oracle(s.next());
  }
}

// The witness depends only on the block carrying the large factor.
TEST(Classify, CosetStability) {
  const auto f = Field::make_of_order(3);
  std::mt19937_64 rng(7);
  const Poly cubic(f, {1, 2, 0, 1});  // t^3 + 2t + 1, irreducible over GF(3)
  ASSERT_TRUE(ppd::is_irreducible(cubic));
  const Matrix c = Matrix::companion(cubic);
  const auto base = ppd::classify_element(block_diag(c, Matrix::identity(f, 2)));
  ASSERT_TRUE(base.has_value());
  for (int trial = 0; trial < 30; ++trial) {
    Matrix h(f, 2, 2);
    do {
      for (int i = 0; i < 4; ++i) h.set(i / 2, i % 2, static_cast<Elem>(rng() % 3));
    } while (ppd::mat_det(h) == 0);
    const auto w = ppd::classify_element(block_diag(c, h));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->e, base->e);
    EXPECT_EQ(w->is_large, base->is_large);
    EXPECT_EQ(w->is_basic, base->is_basic);
    EXPECT_EQ(w->factor, base->factor);
  }
}

TEST(Classify, AllowedE) {
  using V = std::vector<unsigned>;
  EXPECT_EQ(ppd::allowed_e(Family::kLinear, 5, 2), (V{3, 4, 5}));
  EXPECT_EQ(ppd::allowed_e(Family::kLinear, 6, 2), (V{4, 5}));
  EXPECT_EQ(ppd::allowed_e(Family::kSymplectic, 6, 2), (V{4}));
  EXPECT_EQ(ppd::allowed_e(Family::kOrthogonalPlus, 8, 3), (V{6}));
  EXPECT_EQ(ppd::allowed_e(Family::kOrthogonalMinus, 8, 3), (V{6, 8}));
  EXPECT_EQ(ppd::allowed_e(Family::kOrthogonalCircle, 7, 3), (V{4, 6}));
  EXPECT_EQ(ppd::allowed_e(Family::kUnitary, 5, 9), (V{3, 5}));
  // Unitary e must also have a ppd of q0^{2e} - 1; 2^6 - 1 has none.
  EXPECT_EQ(ppd::allowed_e(Family::kUnitary, 3, 4), (V{}));
  EXPECT_EQ(ppd::allowed_e(Family::kUnitary, 11, 4), (V{7, 9, 11}));
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const ppd::Error& e) {
      return e.code();
    }
    return ppd::ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([] { ppd::allowed_e(Family::kSymplectic, 5, 3); }), ppd::ErrorCode::kInvalidCase);
  EXPECT_EQ(code([] { ppd::allowed_e(Family::kUnitary, 3, 8); }), ppd::ErrorCode::kInvalidCase);
  EXPECT_EQ(code([] { ppd::allowed_e(Family::kOrthogonalCircle, 5, 4); }), ppd::ErrorCode::kInvalidCase);
}

TEST(Classify, ClassifyAtDimension200) {
  const auto g = fixtures::standard(Family::kLinear, 200, 2);
  ppd::Sampler s(g.generators, 1, {10, 50});
  int witnesses = 0;
  for (int i = 0; i < 5; ++i) {
    const auto w = ppd::classify_element(s.next());
    if (!w) continue;
    ++witnesses;
    EXPECT_GT(w->e, 100u);
    EXPECT_LE(w->e, 200u);
  }
  EXPECT_GE(witnesses, 0);
}

}  // namespace
