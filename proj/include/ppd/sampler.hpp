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

#ifndef PPD_SAMPLER_HPP
#define PPD_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ppd/matrix.hpp"

namespace ppd {

// mt19937_64 with bounded draws by rejection, so streams are identical across
// standard libraries (std::uniform_int_distribution is not specified exactly).
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Seed for an independent stream (seed, index), by a splitmix64 finalizer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct SamplerOptions {
  std::size_t slots = 10;
  unsigned burn_in = 200;
};

// Product replacement with an accumulator ("rattle"). Slots start as the
// generators repeated cyclically; each step replaces slot i by
// slot_i * slot_j^{+-1} for random i != j and multiplies the accumulator by
// the new slot_i. Slot inverses are carried along so both signs cost one
// product.
class Sampler {
 public:
  Sampler(const std::vector<Matrix>& gens, std::uint64_t seed, SamplerOptions options = {});

  Matrix next();

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t steps_taken() const noexcept { return steps_; }
  std::size_t slot_count() const noexcept { return slots_.size(); }

 private:
  void step();

  std::uint64_t seed_;
  Rng rng_;
  std::vector<Matrix> slots_;
  std::vector<Matrix> inverses_;
  Matrix accumulator_;
  std::uint64_t steps_ = 0;
};

}  // namespace ppd

#endif  // PPD_SAMPLER_HPP
