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

#include "ppd/classify.hpp"

#include <sstream>

namespace ppd {

std::optional<PpdWitness> classify_charpoly(const Poly& charpoly, const ArithmeticLimits& limits) {
  const int d = charpoly.degree();
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "characteristic polynomial of degree 0");
  if (charpoly.coeff(0) == 0) throw Error(ErrorCode::kSingularInput, "element is singular");

  const Poly* factor = nullptr;
  const auto parts = poly_sfdd(charpoly);
  for (const auto& part : parts) {
    if (2 * static_cast<int>(part.degree) > d) {
      // At most one irreducible factor of degree > d/2 fits in degree d.
      if (part.product.degree() != static_cast<int>(part.degree)) {
        throw Error(ErrorCode::kInconsistent, "two large factors in one characteristic polynomial");
      }
      factor = &part.product;
    }
  }
  if (factor == nullptr) return std::nullopt;

  const Field& f = *charpoly.field();
  const unsigned e = factor->degree();
  const PhiTriple phi = phi_triple(e, f.order(), f.characteristic(), f.degree(), limits);
  if (phi.phi == 1) return std::nullopt;

  const BigInt n = big_pow(f.order(), e) - 1;
  const Poly t = Poly::variable(charpoly.field());
  auto escapes = [&](const BigInt& part) { return !poly_powmod(t, n / part, *factor).is_one(); };

  const bool ppd = escapes(phi.phi);
  if (!ppd) return std::nullopt;
  PpdWitness w;
  w.e = e;
  w.factor = *factor;
  if (phi.phi_large > 1) w.is_large = phi.phi_large == phi.phi ? true : escapes(phi.phi_large);
  if (phi.phi_basic > 1) w.is_basic = phi.phi_basic == phi.phi ? true : escapes(phi.phi_basic);
  return w;
}

std::optional<PpdWitness> classify_element(const Matrix& g, const ArithmeticLimits& limits) {
  if (!g.is_square()) throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
  return classify_charpoly(mat_charpoly(g), limits);
}

std::string format_witness(const std::optional<PpdWitness>& w) {
  if (!w) return "none";
  std::ostringstream os;
  os << "e=" << w->e << " ppd=true large=" << (w->is_large ? "true" : "false")
     << " basic=" << (w->is_basic ? "true" : "false") << " factor=" << format_poly(w->factor);
  return os.str();
}

std::vector<unsigned> allowed_e(Family family, unsigned d, std::uint64_t q) {
  if (d < 1) throw Error(ErrorCode::kInvalidCase, "dimension must be positive");
  const auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) throw Error(ErrorCode::kNotPrime, "q is not a prime power");
  const std::uint64_t p = primes[0];
  unsigned a = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++a;

  const bool even_d = d % 2 == 0;
  bool odd_only = false, even_only = false;
  switch (family) {
    case Family::kLinear:
      break;
    case Family::kSymplectic:
    case Family::kOrthogonalPlus:
    case Family::kOrthogonalMinus:
      if (!even_d) throw Error(ErrorCode::kInvalidCase, std::string(family_name(family)) + " needs even d");
      even_only = true;
      break;
    case Family::kOrthogonalCircle:
      if (even_d || p == 2) throw Error(ErrorCode::kInvalidCase, "orthogonal-circle needs odd d and odd q");
      even_only = true;
      break;
    case Family::kUnitary:
      if (a % 2 != 0) throw Error(ErrorCode::kInvalidCase, "unitary needs square q");
      odd_only = true;
      break;
  }
  std::uint64_t q0 = 1;
  for (unsigned i = 0; i < a / 2; ++i) q0 *= p;

  std::vector<unsigned> out;
  for (unsigned e = d / 2 + 1; e <= d; ++e) {
    if (even_only && e % 2 != 0) continue;
    if (odd_only && e % 2 == 0) continue;
    if (family == Family::kOrthogonalPlus && e == d) continue;
    if (!has_ppd(q, e)) continue;
    if (family == Family::kUnitary && !has_ppd(q0, 2 * e)) continue;
    out.push_back(e);
  }
  return out;
}

}  // namespace ppd
