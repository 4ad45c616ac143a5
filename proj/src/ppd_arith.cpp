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

#include "ppd/ppd_arith.hpp"

#include <mutex>
#include <shared_mutex>
#include <utility>

#include "ppd/error.hpp"

namespace ppd {

namespace {

void check_base(std::uint64_t b, unsigned e) {
  if (b < 2) throw Error(ErrorCode::kInvalidArgument, "base must exceed 1");
  if (e < 1) throw Error(ErrorCode::kInvalidArgument, "exponent must be positive");
}

void check_cap(const BigInt& power, const ArithmeticLimits& limits) {
  // power <= 2^max_bits
  const std::size_t bits = bit_length(power);
  if (bits > limits.max_bits + 1 ||
      (bits == limits.max_bits + 1 && mpz_scan1(power.get_mpz_t(), 0) != limits.max_bits)) {
    throw Error(ErrorCode::kOverflow, "b^e exceeds 2^" + std::to_string(limits.max_bits));
  }
}

int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Value of the e-th cyclotomic polynomial at b.
BigInt cyclotomic_value(std::uint64_t b, unsigned e) {
  BigInt num = 1, den = 1;
  for (unsigned j = 1; j <= e; ++j) {
    if (e % j != 0) continue;
    int mu = moebius(e / j);
    if (mu == 0) continue;
    BigInt v = big_pow(b, j) - 1;
    if (mu > 0) {
      num *= v;
    } else {
      den *= v;
    }
  }
  return num / den;
}

bool is_primitive(const BigInt& r, std::uint64_t b, unsigned e) {
  BigInt bb = big_from_u64(b), x;
  mpz_powm_ui(x.get_mpz_t(), bb.get_mpz_t(), e, r.get_mpz_t());
  if (x != 1) return false;
  for (std::uint64_t c : prime_divisors(e)) {
    mpz_powm_ui(x.get_mpz_t(), bb.get_mpz_t(), e / c, r.get_mpz_t());
    if (x == 1) return false;
  }
  return true;
}

std::shared_mutex& memo_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<std::pair<std::uint64_t, unsigned>, BigInt>& memo() {
  static std::map<std::pair<std::uint64_t, unsigned>, BigInt> m;
  return m;
}

void check_power(std::uint64_t q, std::uint64_t p, unsigned a) {
  BigInt pa = big_pow(p, a);
  if (a < 1 || pa != big_from_u64(q)) {
    throw Error(ErrorCode::kInconsistent, "q is not p^a");
  }
}

}  // namespace

PpdSet ppd_list(std::uint64_t b, unsigned e, const ArithmeticLimits& limits) {
  check_base(b, e);
  const BigInt power = big_pow(b, e);
  check_cap(power, limits);
  PpdSet out;
  out.b = b;
  out.e = e;
  // Every primitive prime divisor of b^e - 1 divides the cyclotomic value,
  // which is far smaller than b^e - 1.
  const BigInt n = power - 1;
  for (const auto& [r, v] : factorize(cyclotomic_value(b, e), limits)) {
    if (is_primitive(r, b, e)) out.primes[r] = valuation(n, r);
  }
  return out;
}

BigInt ppd_part(std::uint64_t b, unsigned e) {
  check_base(b, e);
  const auto key = std::make_pair(b, e);
  {
    std::shared_lock lock(memo_mutex());
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  BigInt phi = big_pow(b, e) - 1;
  BigInt g;
  for (std::uint64_t c : prime_divisors(e)) {
    const BigInt sub = big_pow(b, e / c) - 1;
    for (;;) {
      mpz_gcd(g.get_mpz_t(), phi.get_mpz_t(), sub.get_mpz_t());
      if (g == 1) break;
      phi /= g;
    }
  }
  std::unique_lock lock(memo_mutex());
  memo().emplace(key, phi);
  return phi;
}

bool has_ppd(std::uint64_t b, unsigned e) { return ppd_part(b, e) > 1; }

bool zsigmondy_has_ppd(std::uint64_t b, unsigned e) {
  check_base(b, e);
  if (b == 2 && (e == 6 || e == 1)) return false;
  if (e == 2) {
    const std::uint64_t s = b + 1;
    if ((s & (s - 1)) == 0) return false;
  }
  return true;
}

PhiTriple phi_triple(unsigned e, std::uint64_t q, std::uint64_t p, unsigned a,
                     const ArithmeticLimits& limits) {
  check_base(q, e);
  check_power(q, p, a);
  check_cap(big_pow(q, e), limits);
  PhiTriple t;
  t.e = e;
  t.q = q;
  t.phi = ppd_part(q, e);
  t.phi_large = t.phi;
  if (mpz_divisible_ui_p(t.phi.get_mpz_t(), e + 1)) t.phi_large = t.phi / (e + 1);
  t.phi_basic = ppd_part(p, a * e);
  return t;
}

PhiTriple phi_triple_factored(unsigned e, std::uint64_t q, std::uint64_t p, unsigned a,
                              const ArithmeticLimits& limits) {
  check_base(q, e);
  check_power(q, p, a);
  PhiTriple t;
  t.e = e;
  t.q = q;
  t.phi = 1;
  t.phi_large = 1;
  t.phi_basic = 1;
  for (const auto& [r, v] : ppd_list(q, e, limits).primes) {
    t.phi_factors[r] = v;
    BigInt rv;
    mpz_pow_ui(rv.get_mpz_t(), r.get_mpz_t(), v);
    t.phi *= rv;
    unsigned m = 0;
    if (r >= 2 * e + 1) {
      m = v;
    } else if (r == e + 1 && v >= 2) {
      m = v - 1;
    }
    if (m > 0) {
      t.large_factors[r] = m;
      BigInt rm;
      mpz_pow_ui(rm.get_mpz_t(), r.get_mpz_t(), m);
      t.phi_large *= rm;
    }
  }
  for (const auto& [r, v] : ppd_list(p, a * e, limits).primes) {
    t.basic_factors[r] = v;
    BigInt rv;
    mpz_pow_ui(rv.get_mpz_t(), r.get_mpz_t(), v);
    t.phi_basic *= rv;
  }
  return t;
}

}  // namespace ppd
