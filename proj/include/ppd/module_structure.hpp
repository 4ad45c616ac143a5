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

#ifndef PPD_MODULE_STRUCTURE_HPP
#define PPD_MODULE_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ppd/classical.hpp"
#include "ppd/matrix.hpp"

namespace ppd {

enum class Irreducibility { kIrreducible, kReducible, kInconclusive };

const char* irreducibility_name(Irreducibility s) noexcept;

struct IrreducibilityReport {
  Irreducibility status = Irreducibility::kInconclusive;
  // Echelon rows of a proper nonzero invariant subspace when reducible.
  std::optional<Matrix> witness;
  unsigned attempts = 0;
};

// Norton's irreducibility test. Each attempt draws a random element theta of
// the enveloping algebra and an irreducible factor h of its characteristic
// polynomial. A kernel vector of h(theta) that spins to a proper subspace, or
// a kernel vector of h(theta)^T that spins to a proper subspace under the
// transposed generators, proves reducibility. If nullity h(theta) = deg h and
// both spins fill the space the module is irreducible: the kernel is then a
// one-dimensional GF(q)[t]/(h)-space, so a proper submodule U meets it
// trivially, h divides the characteristic polynomial of theta on V/U, and
// the annihilator of U in the dual would contain the dual kernel vector.
IrreducibilityReport is_irreducible(const std::vector<Matrix>& gens, unsigned max_attempts = 20,
                                    std::uint64_t seed = 0);
IrreducibilityReport is_irreducible(const GroupInput& g, unsigned max_attempts = 20,
                                    std::uint64_t seed = 0);

// True iff every row of `basis` times every generator stays in its row space.
bool is_invariant_subspace(const Matrix& basis, const std::vector<Matrix>& gens);

// dim over GF(q) of {X : X m = m X for all m in mats}.
std::size_t centralizer_dim(const std::vector<Matrix>& mats);

}  // namespace ppd

#endif  // PPD_MODULE_STRUCTURE_HPP
