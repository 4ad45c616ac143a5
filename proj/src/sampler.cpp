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

#include "ppd/sampler.hpp"

#include <algorithm>

namespace ppd {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  // Largest multiple of n representable; draws above it are rejected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Sampler::Sampler(const std::vector<Matrix>& gens, std::uint64_t seed, SamplerOptions options)
    : seed_(seed), rng_(seed) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "sampler needs generators");
  const std::size_t m = std::max({options.slots, std::size_t{10}, gens.size() + 2});
  std::vector<Matrix> inv;
  inv.reserve(gens.size());
  for (const auto& g : gens) inv.push_back(mat_inverse(g));
  for (std::size_t i = 0; i < m; ++i) {
    slots_.push_back(gens[i % gens.size()]);
    inverses_.push_back(inv[i % gens.size()]);
  }
  accumulator_ = Matrix::identity(gens[0].field(), gens[0].rows());
  for (unsigned k = 0; k < options.burn_in; ++k) step();
}

void Sampler::step() {
  const std::size_t m = slots_.size();
  const std::size_t i = rng_.below(m);
  std::size_t j = rng_.below(m - 1);
  if (j >= i) ++j;
  if (rng_.below(2) == 0) {
    slots_[i] = mat_mul(slots_[i], slots_[j]);
    inverses_[i] = mat_mul(inverses_[j], inverses_[i]);
  } else {
    slots_[i] = mat_mul(slots_[i], inverses_[j]);
    inverses_[i] = mat_mul(slots_[j], inverses_[i]);
  }
  accumulator_ = mat_mul(accumulator_, slots_[i]);
  ++steps_;
}

Matrix Sampler::next() {
  step();
  return accumulator_;
}

}  // namespace ppd
