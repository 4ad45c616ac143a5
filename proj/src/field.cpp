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

#include "ppd/field.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "ppd/poly.hpp"

namespace ppd {

// Miller-Rabin with the first 12 prime bases, deterministic for 64 bits.
bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  auto mulmod = [n](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % n);
  };
  std::uint64_t odd = n - 1;
  unsigned twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  for (std::uint64_t b : kBases) {
    std::uint64_t x = 1, base = b, k = odd;
    for (; k; k >>= 1, base = mulmod(base, base)) {
      if (k & 1) x = mulmod(x, base);
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < twos && composite; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
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

// Least monic irreducible of degree a over GF(p) in the canonical order.
std::vector<Elem> canonical_modulus(const FieldPtr& prime_field, unsigned a) {
  const std::uint32_t p = prime_field->order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < a; ++i) count *= p;
  std::vector<Elem> coeffs(a + 1, 0);
  coeffs[a] = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < a; ++i) {
      coeffs[i] = static_cast<Elem>(c % p);
      c /= p;
    }
    if (coeffs[0] == 0) continue;  // divisible by t
    if (is_irreducible(Poly(prime_field, coeffs))) return coeffs;
  }
  throw Error(ErrorCode::kInconsistent, "no irreducible polynomial found");
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint64_t, unsigned>, FieldPtr>& registry() {
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> r;
  return r;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned a) {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be positive");
  if (!is_prime_u64(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorCode::kOverflow, "field order exceeds 2^20");
    }
  }
  const auto key = std::make_pair(p, a);
  {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
  }
  std::vector<Elem> modulus;
  if (a > 1) modulus = canonical_modulus(make(p, 1), a);
  FieldPtr field(new Field(static_cast<std::uint32_t>(p), a, std::move(modulus)));
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto [it, inserted] = registry().emplace(key, field);
  return it->second;
}

FieldPtr Field::make_of_order(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::kNotPrime, "field order must be at least 2");
  if (q > kMaxOrder) throw Error(ErrorCode::kOverflow, "field order exceeds 2^20");
  auto primes = distinct_prime_factors(q);
  if (primes.size() != 1) {
    throw Error(ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
  }
  unsigned a = 0;
  for (std::uint64_t r = q; r > 1; r /= primes[0]) ++a;
  return make(primes[0], a);
}

Field::Field(std::uint32_t p, unsigned a, std::vector<Elem> modulus)
    : p_(p), a_(a), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < a; ++i) q_ *= p;
  if (a == 1) {
    kind_ = Kind::kPrime;
  } else if (p == 2) {
    kind_ = Kind::kBinary;
  } else {
    kind_ = Kind::kOddExtension;
  }

  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = exp_[1] = exp_[2] = 1;
    return;
  }

  // Smallest encoding of multiplicative order q - 1.
  auto primes = distinct_prime_factors(n);
  auto slow_pow = [this](Elem x, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, x);
      x = slow_mul(x, x);
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem c = 2; c < q_ && g == 0; ++c) {
    bool primitive = true;
    for (auto r : primes) {
      if (slow_pow(c, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) g = c;
  }

  Elem x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, g);
  }
  for (std::uint32_t k = n; k < exp_.size(); ++k) exp_[k] = exp_[k - n];

  if (kind_ == Kind::kOddExtension) {
    zech_.assign(n, -1);
    for (std::uint32_t k = 0; k < n; ++k) {
      Elem s = slow_add(1, exp_[k]);
      zech_[k] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
    }
  }
}

Elem Field::slow_add(Elem x, Elem y) const {
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < a_; ++i) {
    Elem dx = x % p_, dy = y % p_;
    out += ((dx + dy) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::slow_mul(Elem x, Elem y) const {
  if (a_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(x) * y % p_);
  std::vector<std::uint64_t> dx(a_), dy(a_), prod(2 * a_ - 1, 0);
  for (unsigned i = 0; i < a_; ++i) {
    dx[i] = x % p_;
    dy[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (unsigned i = 0; i < a_; ++i) {
    for (unsigned j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
  }
  // Reduce by the monic modulus.
  for (unsigned k = 2 * a_ - 2; k >= a_; --k) {
    std::uint64_t c = prod[k];
    if (c != 0) {
      for (unsigned j = 0; j < a_; ++j) {
        prod[k - a_ + j] = (prod[k - a_ + j] + (p_ - c) * modulus_[j]) % p_;
      }
      prod[k] = 0;
    }
  }
  Elem out = 0;
  for (unsigned i = a_; i-- > 0;) out = out * p_ + static_cast<Elem>(prod[i]);
  return out;
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

Elem Field::pow(Elem x, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (x == 0) return 0;
  if (q_ == 2) return 1;
  std::uint64_t k = (static_cast<std::uint64_t>(log_[x]) * (n % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

Elem Field::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::conjugate(Elem x) const {
  if (a_ % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "conjugation needs a square field order");
  std::uint64_t root = 1;
  for (unsigned i = 0; i < a_ / 2; ++i) root *= p_;
  return pow(x, root);
}

bool Field::is_square(Elem x) const noexcept {
  if (x == 0 || p_ == 2) return true;
  return log_[x] % 2 == 0;
}

}  // namespace ppd
