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

#ifndef PPD_RECOGNITION_HPP
#define PPD_RECOGNITION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppd/classical.hpp"
#include "ppd/classify.hpp"
#include "ppd/sampler.hpp"

namespace ppd {

struct ProportionBounds {
  unsigned e = 0;
  mpq_class lower;
  mpq_class upper;
  bool doubled = false;
};

// [1/(e+1), 1/e), doubled to [2/(d+1), 2/d) for orthogonal-minus with e = d
// at the omega and so levels. E_NOT_ALLOWED unless e is in allowed_e.
ProportionBounds proportion_bounds(Family family, unsigned d, std::uint64_t q, unsigned e,
                                   Level level);

struct RecognitionPlan {
  double epsilon = 0;
  Family family = Family::kLinear;
  unsigned d = 0;
  std::uint64_t q = 0;
  std::vector<unsigned> allowed;
  std::map<unsigned, double> lower;  // e -> lower bound used by the model
  // Summed lower bounds over e with a large, resp. basic, ppd.
  double mass_large = 0;
  double mass_basic = 0;
  unsigned n1 = 0;
  std::map<std::uint64_t, unsigned> n2;
  unsigned n3 = 0;
  // Primes b that are eliminated by the commutator centralizer test rather
  // than by sampling (b = 2 for symplectic and orthogonal groups).
  std::vector<std::uint64_t> centralizer_primes;
  // Number of commutators sampled for the centralizer test.
  unsigned commutators = 8;

  unsigned total_budget() const;
};

// INVALID_ARGUMENT unless 0 < epsilon < 1. UNSUPPORTED_DIMENSION when fewer
// than three e are admissible, when no admissible e has a large or a basic
// primitive prime divisor, or when a prime b | d cannot be eliminated.
RecognitionPlan plan(Family family, unsigned d, std::uint64_t q, double epsilon,
                     const ArithmeticLimits& limits = {});

// Stage-1 failure bound of the categorical model after n draws.
double stage1_failure_bound(const RecognitionPlan& plan, unsigned n);

// Whether witness degree e rules out extension-field subgroups of degree b.
bool eliminates(unsigned e, std::uint64_t b, unsigned d, std::uint64_t q);

struct Sample {
  std::optional<Matrix> element;
  std::optional<PpdWitness> witness;
};
using SampleSource = std::function<Sample()>;

// The three stages over a shared witness pool. Every draw is recorded in the
// transcript in draw order.
class Recognition {
 public:
  Recognition(RecognitionPlan plan, SampleSource source);

  bool stage1();
  bool stage2();
  bool stage3();

  const RecognitionPlan& plan() const noexcept { return plan_; }
  const std::vector<std::string>& transcript() const noexcept { return transcript_; }
  const std::vector<PpdWitness>& witnesses() const noexcept { return pool_; }
  std::size_t draws() const noexcept { return draws_; }

 private:
  Sample draw();
  bool stage1_done() const;
  std::vector<std::uint64_t> remaining_primes() const;

  RecognitionPlan plan_;
  SampleSource source_;
  std::vector<PpdWitness> pool_;
  std::vector<std::string> transcript_;
  std::size_t draws_ = 0;
};

enum class Outcome { kContainsOmega, kLikelyNotOmega, kPreconditionFailed, kUnsupported };

const char* outcome_name(Outcome o) noexcept;

struct RecognitionVerdict {
  Outcome outcome = Outcome::kUnsupported;
  std::string reason;
  unsigned failed_stage = 0;
  std::vector<std::string> transcript;
  std::vector<PpdWitness> witnesses;
  std::size_t draws = 0;
};

struct RecognizeOptions {
  unsigned irreducibility_attempts = 20;
  SamplerOptions sampler;
  ArithmeticLimits limits;
};

RecognitionVerdict recognize(const GroupInput& g, double epsilon, std::uint64_t seed,
                             const RecognizeOptions& options = {});

std::string format_epsilon(double epsilon);

}  // namespace ppd

#endif  // PPD_RECOGNITION_HPP
