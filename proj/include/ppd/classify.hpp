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

#ifndef PPD_CLASSIFY_HPP
#define PPD_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ppd/classical.hpp"
#include "ppd/matrix.hpp"
#include "ppd/poly.hpp"
#include "ppd/ppd_arith.hpp"

namespace ppd {

// g is a ppd(d,q;e)-element with d/2 < e <= d; factor is the irreducible
// degree-e factor of its characteristic polynomial.
struct PpdWitness {
  unsigned e = 0;
  Poly factor;
  bool is_large = false;
  bool is_basic = false;
};

// SINGULAR_INPUT if g is singular. nullopt when g is not a ppd-element for
// any e > d/2.
std::optional<PpdWitness> classify_element(const Matrix& g, const ArithmeticLimits& limits = {});

// Same test from an already computed characteristic polynomial of degree d.
std::optional<PpdWitness> classify_charpoly(const Poly& charpoly,
                                            const ArithmeticLimits& limits = {});

// "e=<e> ppd=true large=<b> basic=<b> factor=<poly>" or "none".
std::string format_witness(const std::optional<PpdWitness>& w);

// The e in (d/2, d] for which ppd(d,q;e)-elements can occur in the group:
// parity restrictions per family, e = d removed for orthogonal-plus, and e
// removed when q^e - 1 has no primitive prime divisor. For unitary groups
// over GF(q0^2) also removes e when q0^{2e} - 1 has none, since only those
// primes divide the group order.
std::vector<unsigned> allowed_e(Family family, unsigned d, std::uint64_t q);

}  // namespace ppd

#endif  // PPD_CLASSIFY_HPP
