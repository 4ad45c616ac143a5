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

#include "ppd/field.hpp"
#include "support/oracles.hpp"

namespace {

using ppd::Elem;
using ppd::Field;

TEST(Field, CanonicalModuli) {
  EXPECT_EQ(Field::make(2, 2)->modulus(), (std::vector<Elem>{1, 1, 1}));
  EXPECT_EQ(Field::make(2, 3)->modulus(), (std::vector<Elem>{1, 1, 0, 1}));
  EXPECT_EQ(Field::make(3, 2)->modulus(), (std::vector<Elem>{1, 0, 1}));
  EXPECT_TRUE(Field::make(7, 1)->modulus().empty());
}

TEST(Field, ModuliMatchBruteForceSearch) {
  for (auto [p, a] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}}) {
    naive::Field ref(p, a);
    const auto f = Field::make(p, a);
    EXPECT_EQ(f->modulus(), ref.modulus()) << p << "^" << a;
  }
}

TEST(Field, Interned) {
  EXPECT_EQ(Field::make(2, 4).get(), Field::make_of_order(16).get());
  EXPECT_EQ(Field::make_of_order(25)->degree(), 2u);
}

TEST(Field, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const ppd::Error& e) {
      return e.code();
    }
    return ppd::ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code([] { Field::make(4, 1); }), ppd::ErrorCode::kNotPrime);
  EXPECT_EQ(code([] { Field::make_of_order(12); }), ppd::ErrorCode::kNotPrime);
  EXPECT_EQ(code([] { Field::make(2, 21); }), ppd::ErrorCode::kOverflow);
  EXPECT_THROW(Field::make(3, 1)->inv(0), ppd::Error);
}

// Every field operation agrees with polynomial arithmetic modulo the same
// modulus, exhaustively on small fields and on random pairs on larger ones.
TEST(Field, AgreesWithPolynomialArithmetic) {
  std::mt19937_64 rng(11);
  for (auto [p, a] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 8}, {3, 4}, {7, 3}, {2, 12}, {5, 5}}) {
    const auto f = Field::make(p, a);
    naive::Field ref(p, a);
    const std::uint32_t q = f->order();
    const bool exhaustive = q <= 32;
    const std::size_t n = exhaustive ? q * q : 4000;
    for (std::size_t k = 0; k < n; ++k) {
      const Elem x = exhaustive ? static_cast<Elem>(k / q) : static_cast<Elem>(rng() % q);
      const Elem y = exhaustive ? static_cast<Elem>(k % q) : static_cast<Elem>(rng() % q);
      ASSERT_EQ(f->add(x, y), ref.add(x, y)) << q << ": " << x << "+" << y;
      ASSERT_EQ(f->mul(x, y), ref.mul(x, y)) << q << ": " << x << "*" << y;
      ASSERT_EQ(f->sub(x, y), ref.sub(x, y));
      if (y != 0) ASSERT_EQ(f->div(x, y), ref.mul(x, ref.inv(y)));
    }
  }
}

TEST(Field, GroupStructure) {
  for (std::uint64_t q : {2, 4, 9, 27, 49, 64, 125, 1024}) {
    const auto f = Field::make_of_order(q);
    const Elem g = f->primitive_element();
    // g has order exactly q - 1 and is the least such encoding.
    EXPECT_EQ(f->pow(g, q - 1), 1u);
    for (Elem x = 1; x < g; ++x) {
      bool primitive = true;
      for (std::uint64_t k = 1; k < q - 1 && primitive; ++k) primitive = f->pow(x, k) != 1;
      EXPECT_FALSE(primitive && q > 2) << "smaller primitive element " << x << " in GF(" << q << ")";
    }
    for (Elem x = 1; x < q; ++x) {
      EXPECT_EQ(f->exp(f->log(x)), x);
      EXPECT_EQ(f->mul(x, f->inv(x)), 1u);
    }
  }
}

TEST(Field, FrobeniusAndConjugate) {
  const auto f = Field::make_of_order(16);
  for (Elem x = 0; x < 16; ++x) {
    EXPECT_EQ(f->frobenius(x), f->mul(x, x));
    EXPECT_EQ(f->frobenius_root(f->frobenius(x)), x);
    EXPECT_EQ(f->conjugate(f->conjugate(x)), x);
    EXPECT_EQ(f->conjugate(x), f->pow(x, 4));
  }
  EXPECT_THROW(Field::make_of_order(8)->conjugate(3), ppd::Error);
}

TEST(Field, SquaresAndIntegers) {
  for (std::uint64_t q : {3, 5, 9, 25, 27}) {
    const auto f = Field::make_of_order(q);
    std::vector<bool> sq(q, false);
    for (Elem x = 0; x < q; ++x) sq[f->mul(x, x)] = true;
    for (Elem x = 0; x < q; ++x) EXPECT_EQ(f->is_square(x), sq[x]) << q << " " << x;
  }
  const auto f = Field::make_of_order(9);
  EXPECT_EQ(f->from_int(-1), f->neg(1));
  EXPECT_EQ(f->from_int(7), 1u);
}

TEST(Field, PrimeTest) {
  EXPECT_TRUE(ppd::is_prime_u64(2));
  EXPECT_TRUE(ppd::is_prime_u64(1000003));
  EXPECT_FALSE(ppd::is_prime_u64(1));
  EXPECT_FALSE(ppd::is_prime_u64(561));
  EXPECT_TRUE(ppd::is_prime_u64(18446744073709551557ULL));
}

}  // namespace
