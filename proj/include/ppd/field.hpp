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

#ifndef PPD_FIELD_HPP
#define PPD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "ppd/error.hpp"

namespace ppd {

// A field element is its integer encoding: the element sum c_i x^i of the
// power basis (x a root of the field modulus) is stored as sum c_i p^i.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^a) with the canonical modulus: the least monic irreducible of degree
// a over GF(p), polynomials compared by the integer sum c_i p^i over their
// non-leading coefficients. Instances are interned, so two handles with the
// same (p, a) point at the same object.
//
// Arithmetic goes through log/antilog tables (Zech logarithms for addition in
// odd-characteristic extension fields), which bounds q by kMaxOrder.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  static FieldPtr make(std::uint64_t p, unsigned a);
  // Factors q = p^a first; NOT_PRIME if q is not a prime power.
  static FieldPtr make_of_order(std::uint64_t q);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return a_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return a_ == 1; }
  bool is_binary() const noexcept { return p_ == 2; }

  // Coefficients over GF(p), constant term first, leading 1 included.
  // Empty for prime fields.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  // Generator of the multiplicative group used for the log tables.
  Elem primitive_element() const noexcept { return exp_[1]; }

  Elem add(Elem x, Elem y) const noexcept {
    switch (kind_) {
      case Kind::kPrime: {
        Elem s = x + y;
        return s >= p_ ? s - p_ : s;
      }
      case Kind::kBinary:
        return x ^ y;
      case Kind::kOddExtension:
        return zech_add(x, y);
    }
    return 0;
  }
  Elem neg(Elem x) const noexcept {
    if (x == 0) return 0;
    switch (kind_) {
      case Kind::kPrime: return p_ - x;
      case Kind::kBinary: return x;
      case Kind::kOddExtension: return exp_[log_[x] + (q_ - 1) / 2];
    }
    return 0;
  }
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const noexcept {
    if (x == 0 || y == 0) return 0;
    if (kind_ == Kind::kPrime) {
      return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
    }
    return exp_[log_[x] + log_[y]];
  }
  // x * y + z, the inner-loop shape of most linear algebra here.
  Elem mul_add(Elem x, Elem y, Elem z) const noexcept { return add(mul(x, y), z); }

  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t n) const noexcept;

  // Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;
  Elem one() const noexcept { return 1; }

  // x -> x^p.
  Elem frobenius(Elem x) const noexcept { return pow(x, p_); }
  // x -> x^{sqrt q}, the involution of GF(q) for even a. INVALID_ARGUMENT for odd a.
  Elem conjugate(Elem x) const;
  // Inverse of the Frobenius map, x -> x^{q/p}.
  Elem frobenius_root(Elem x) const noexcept { return a_ == 1 ? x : pow(x, q_ / p_); }

  // Discrete log to base primitive_element(); x must be nonzero.
  std::uint32_t log(Elem x) const noexcept { return log_[x]; }
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }

  bool is_square(Elem x) const noexcept;
  bool contains(std::uint64_t rep) const noexcept { return rep < q_; }

 private:
  enum class Kind { kPrime, kBinary, kOddExtension };

  Field(std::uint32_t p, unsigned a, std::vector<Elem> modulus);

  Elem zech_add(Elem x, Elem y) const noexcept {
    if (x == 0) return y;
    if (y == 0) return x;
    std::uint32_t lx = log_[x];
    std::uint32_t ly = log_[y];
    std::uint32_t d = ly >= lx ? ly - lx : ly + (q_ - 1) - lx;
    std::int32_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[lx + static_cast<std::uint32_t>(z)];
  }

  // Table-free arithmetic used while the tables are being built.
  Elem slow_add(Elem x, Elem y) const;
  Elem slow_mul(Elem x, Elem y) const;

  std::uint32_t p_;
  unsigned a_;
  std::uint32_t q_;
  Kind kind_;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;           // length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::int32_t> zech_;  // log(1 + g^k), -1 when 1 + g^k = 0
};

bool is_prime_u64(std::uint64_t n) noexcept;

}  // namespace ppd

#endif  // PPD_FIELD_HPP
