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

#ifndef PPD_PPD_ARITH_HPP
#define PPD_PPD_ARITH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppd/bigint.hpp"

namespace ppd {

using Factorization = std::map<BigInt, unsigned>;

struct ArithmeticLimits {
  // q^e (or n, for factorize) may not exceed 2^max_bits.
  unsigned max_bits = 512;
};

// Miller-Rabin. Bases are the first 12 primes, which is deterministic below
// 3.18 * 10^23; above that the first 24 primes are used and the answer is
// probabilistic (no counterexample is known).
bool is_probable_prime(const BigInt& n);

// Complete factorization by trial division and Pollard-Brent rho.
Factorization factorize(const BigInt& n, const ArithmeticLimits& limits = {});

// r^v exactly dividing n.
unsigned valuation(const BigInt& n, const BigInt& r);

struct PpdSet {
  std::uint64_t b = 0;
  unsigned e = 0;
  // Primitive prime divisors of b^e - 1 with their valuations in b^e - 1.
  Factorization primes;
};

PpdSet ppd_list(std::uint64_t b, unsigned e, const ArithmeticLimits& limits = {});

// Whether b^e - 1 has a primitive prime divisor. Computed, not looked up,
// and not subject to the magnitude cap.
bool has_ppd(std::uint64_t b, unsigned e);

// Zsigmondy's exception list: false iff (b,e) = (2,6), or e = 2 and b + 1 is a
// power of 2, or (b,e) = (2,1).
bool zsigmondy_has_ppd(std::uint64_t b, unsigned e);

// Product of the primitive prime divisors of b^e - 1 with multiplicity, by
// the gcd cascade: start from b^e - 1 and divide out gcd(., b^{e/c} - 1)
// for every prime c | e until it is 1. Memoized.
BigInt ppd_part(std::uint64_t b, unsigned e);

struct PhiTriple {
  unsigned e = 0;
  std::uint64_t q = 0;
  BigInt phi;
  BigInt phi_large;
  BigInt phi_basic;
  // Filled only by phi_triple_factored.
  Factorization phi_factors;
  Factorization large_factors;
  Factorization basic_factors;
};

// Gcd-cascade route. The only primitive prime divisor below 2e + 1 can be
// e + 1, and it enters Phi_l with one factor fewer than in q^e - 1, so
// Phi_l = Phi / (e + 1) when e + 1 divides Phi and Phi otherwise.
PhiTriple phi_triple(unsigned e, std::uint64_t q, std::uint64_t p, unsigned a,
                     const ArithmeticLimits& limits = {});

// Factorization route, with the prime-power decompositions.
PhiTriple phi_triple_factored(unsigned e, std::uint64_t q, std::uint64_t p, unsigned a,
                              const ArithmeticLimits& limits = {});

unsigned mu_distinct_primes(std::uint64_t d);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::string format_factorization(const Factorization& f);

}  // namespace ppd

#endif  // PPD_PPD_ARITH_HPP
