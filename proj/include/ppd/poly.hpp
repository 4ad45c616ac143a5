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

#ifndef PPD_POLY_HPP
#define PPD_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ppd/bigint.hpp"
#include "ppd/field.hpp"

namespace ppd {

// Univariate polynomial over GF(q), coefficients constant term first with no
// trailing zeros. The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly variable(FieldPtr field);
  static Poly monomial(FieldPtr field, Elem c, std::size_t k);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  bool operator==(const Poly& other) const noexcept {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
  }
  bool operator!=(const Poly& other) const noexcept { return !(*this == other); }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

// a = q*b + r with deg r < deg b. ZERO_MODULUS if b is zero.
void divmod(const Poly& a, const Poly& b, Poly* quotient, Poly* remainder);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly monic(const Poly& a);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Elem evaluate(const Poly& a, Elem x);
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus);

// base^exponent mod modulus by square-and-multiply. The modulus must be monic
// of degree at least 1; the base is reduced first.
Poly poly_powmod(const Poly& base, const BigInt& exponent, const Poly& modulus);
Poly poly_powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);

// Product of the distinct monic irreducible factors of f.
Poly squarefree_part(const Poly& f);

struct DegreeFactor {
  unsigned degree;
  Poly product;
};

// Distinct-degree factorization of the square-free part of f, by increasing
// degree. Each product is monic.
std::vector<DegreeFactor> poly_sfdd(const Poly& f);

bool is_irreducible(const Poly& f);

// "c0 c1 ... cn"; the zero polynomial prints as "0".
std::string format_poly(const Poly& f);
Poly parse_poly(const FieldPtr& field, const std::string& text);

}  // namespace ppd

#endif  // PPD_POLY_HPP
