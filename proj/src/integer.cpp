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

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "ppd/error.hpp"
#include "ppd/ppd_arith.hpp"

namespace ppd {

namespace {

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                     41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
constexpr unsigned kTrialBound = 1u << 16;

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned base) {
  BigInt a = base;
  if (a % n == 0) return true;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

// Pollard rho with Brent's cycle detection; returns a nontrivial factor of a
// composite n with no small factors.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const BigInt cc = c;
    std::size_t r = 1;
    const std::size_t m = 128;
    auto f = [&](const BigInt& v) -> BigInt { return (v * v + cc) % n; };
    do {
      x = y;
      for (std::size_t i = 0; i < r; ++i) y = f(y);
      std::size_t k = 0;
      do {
        ys = y;
        for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt diff = x - y;
          if (diff < 0) diff = -diff;
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      // Batch overshot; step back one at a time.
      do {
        ys = f(ys);
        BigInt diff = x - ys;
        if (diff < 0) diff = -diff;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, Factorization* out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    (*out)[n] += 1;
    return;
  }
  BigInt d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<BigInt, Factorization>& cache() {
  static std::map<BigInt, Factorization> c;
  return c;
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  static const BigInt kDeterministicBound("318665857834031151167461");
  const std::size_t bases = n < kDeterministicBound ? 12 : 24;
  for (std::size_t i = 0; i < bases; ++i) {
    if (!miller_rabin_round(n, d, s, kSmallPrimes[i])) return false;
  }
  return true;
}

Factorization factorize(const BigInt& n, const ArithmeticLimits& limits) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "factorize needs n >= 1");
  if (bit_length(n) > limits.max_bits) {
    throw Error(ErrorCode::kOverflow, "number exceeds the magnitude cap");
  }
  {
    std::shared_lock lock(cache_mutex());
    auto it = cache().find(n);
    if (it != cache().end()) return it->second;
  }
  Factorization out;
  BigInt m = n;
  for (unsigned p = 2; p < kTrialBound && m > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned v = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        ++v;
      }
      out[BigInt(p)] = v;
    }
  }
  if (m > 1) factor_into(m, &out);
  std::unique_lock lock(cache_mutex());
  cache().emplace(n, out);
  return out;
}

unsigned valuation(const BigInt& n, const BigInt& r) {
  if (n == 0 || r < 2) throw Error(ErrorCode::kInvalidArgument, "valuation needs n != 0, r >= 2");
  unsigned v = 0;
  BigInt m = n;
  while (mpz_divisible_p(m.get_mpz_t(), r.get_mpz_t())) {
    m /= r;
    ++v;
  }
  return v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned mu_distinct_primes(std::uint64_t d) {
  return static_cast<unsigned>(prime_divisors(d).size());
}

std::string format_factorization(const Factorization& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, v] : f) {
    if (!first) os << ',';
    first = false;
    os << r.get_str();
    if (v > 1) os << '^' << v;
  }
  return first ? "-" : os.str();
}

}  // namespace ppd
