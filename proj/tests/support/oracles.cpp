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

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace naive {

namespace {

std::uint32_t ipow(std::uint32_t b, unsigned e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

void trim(Coeffs* c) {
  while (!c->empty() && c->back() == 0) c->pop_back();
}

// Remainder of f modulo monic g, coefficients mod p.
Coeffs prime_mod(Coeffs f, const Coeffs& g, std::uint32_t p) {
  trim(&f);
  const std::size_t n = g.size() - 1;
  while (f.size() > n) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * static_cast<std::uint64_t>(g[i])) % p);
    }
    trim(&f);
  }
  return f;
}

Coeffs digits(std::uint32_t x, std::uint32_t p, unsigned n) {
  Coeffs c(n);
  for (unsigned i = 0; i < n; ++i) {
    c[i] = x % p;
    x /= p;
  }
  return c;
}

}  // namespace

bool prime_field_irreducible(const Coeffs& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned k = 1; k <= n / 2; ++k) {
    for (std::uint32_t code = 0; code < ipow(p, k); ++code) {
      Coeffs g = digits(code, p, k);
      g.push_back(1);
      if (prime_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, unsigned a) : p_(p), a_(a), q_(ipow(p, a)) {
  if (a == 1) return;
  for (std::uint32_t code = 0; code < q_; ++code) {
    Coeffs m = digits(code, p, a);
    m.push_back(1);
    if (prime_field_irreducible(m, p)) {
      modulus_ = m;
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial");
}

Coeffs Field::decode(std::uint32_t x) const { return digits(x, p_, a_); }

std::uint32_t Field::encode(const Coeffs& c) const {
  std::uint32_t x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * p_ + c[i];
  return x;
}

std::uint32_t Field::add(std::uint32_t x, std::uint32_t y) const {
  Coeffs a = decode(x), b = decode(y);
  for (unsigned i = 0; i < a_; ++i) a[i] = (a[i] + b[i]) % p_;
  return encode(a);
}

std::uint32_t Field::neg(std::uint32_t x) const {
  Coeffs a = decode(x);
  for (auto& c : a) c = (p_ - c) % p_;
  return encode(a);
}

std::uint32_t Field::mul(std::uint32_t x, std::uint32_t y) const {
  if (a_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p_);
  const Coeffs a = decode(x), b = decode(y);
  Coeffs c(2 * a_ - 1, 0);
  for (unsigned i = 0; i < a_; ++i) {
    for (unsigned j = 0; j < a_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  }
  c = prime_mod(c, modulus_, p_);
  c.resize(a_, 0);
  return encode(c);
}

std::uint32_t Field::pow(std::uint32_t x, std::uint64_t n) const {
  std::uint32_t r = 1;
  for (; n; n >>= 1) {
    if (n & 1) r = mul(r, x);
    x = mul(x, x);
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  return pow(x, q_ - 2);
}

Mat identity(std::size_t n) {
  Mat m(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, std::vector<std::uint32_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::uint32_t s = 0;
      for (std::size_t l = 0; l < k; ++l) s = f.add(s, f.mul(a[i][l], b[l][j]));
      c[i][j] = s;
    }
  }
  return c;
}

std::size_t rank(const Field& f, Mat a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const std::uint32_t inv = f.inv(a[r][c]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint32_t k = f.mul(a[i][c], inv);
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(k, a[r][j]));
    }
    ++r;
  }
  return r;
}

Coeffs poly_mul(const Field& f, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(&c);
  return c;
}

Coeffs poly_mod(const Field& f, Coeffs a, const Coeffs& m) {
  trim(&a);
  const std::size_t n = m.size() - 1;
  const std::uint32_t inv = f.inv(m.back());
  while (a.size() > n) {
    const std::uint32_t k = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(k, m[i]));
    trim(&a);
  }
  return a;
}

bool poly_irreducible(const Field& f, const Coeffs& g) {
  const unsigned n = static_cast<unsigned>(g.size() - 1);
  for (unsigned k = 1; k <= n / 2; ++k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= f.q();
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs h(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        h[i] = static_cast<std::uint32_t>(c % f.q());
        c /= f.q();
      }
      h[k] = 1;
      if (poly_mod(f, g, h).empty()) return false;
    }
  }
  return true;
}

namespace {

Coeffs poly_add(const Field& f, Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(&a);
  return a;
}

Coeffs poly_neg(const Field& f, Coeffs a) {
  for (auto& c : a) c = f.neg(c);
  return a;
}

using PolyMat = std::vector<std::vector<Coeffs>>;

Coeffs det(const Field& f, const PolyMat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Coeffs total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    PolyMat minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) minor[i - 1].push_back(m[i][k]);
      }
    }
    Coeffs term = poly_mul(f, m[0][j], det(f, minor));
    if (j % 2 == 1) term = poly_neg(f, term);
    total = poly_add(f, total, term);
  }
  return total;
}

}  // namespace

Coeffs charpoly(const Field& f, const Mat& a) {
  const std::size_t n = a.size();
  PolyMat m(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Coeffs c{f.neg(a[i][j])};
      if (i == j) c.push_back(1);
      trim(&c);
      m[i][j] = c;
    }
  }
  return det(f, m);
}

std::uint64_t element_order(const Field& f, const Mat& a, std::uint64_t cap) {
  const Mat id = identity(a.size());
  Mat x = a;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (x == id) return n;
    x = mat_mul(f, x, a);
  }
  return 0;
}

namespace {

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

Int rho(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, g = 1;
    auto step = [&](const Int& v) -> Int { return (v * v + c) % n; };
    while (g == 1) {
      x = step(x);
      y = step(step(y));
      Int diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>* out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++(*out)[n];
    return;
  }
  const Int d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factor(const Int& n0) {
  if (n0 < 1) throw std::domain_error("factor of non-positive");
  std::map<Int, unsigned> out;
  Int n = n0;
  for (unsigned long r = 2; r < 100000 && r * r <= n; ++r) {
    while (n % r == 0) {
      ++out[Int(r)];
      n /= r;
    }
  }
  factor_into(n, &out);
  return out;
}

Int power(std::uint64_t b, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

std::uint64_t mult_order(std::uint64_t b, const Int& r) {
  Int x = Int(static_cast<unsigned long>(b)) % r;
  Int y = x;
  for (std::uint64_t k = 1;; ++k) {
    if (y == 1) return k;
    y = (y * x) % r;
  }
}

std::map<Int, unsigned> ppds(std::uint64_t b, unsigned e) {
  std::map<Int, unsigned> out;
  const Int n = power(b, e) - 1;
  if (n == 0) return out;
  for (const auto& [r, v] : factor(n)) {
    bool primitive = true;
    for (unsigned i = 1; i < e && primitive; ++i) {
      Int t;
      const Int base(static_cast<unsigned long>(b));
      const Int exp(i);
      mpz_powm(t.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), r.get_mpz_t());
      if (t == 1) primitive = false;
    }
    if (primitive) out[r] = v;
  }
  return out;
}

bool zsigmondy_exception(std::uint64_t b, unsigned e) {
  if (b == 2 && e == 6) return true;
  if (e == 1 && b == 2) return true;
  if (e == 2) {
    const std::uint64_t s = b + 1;
    return (s & (s - 1)) == 0;
  }
  return false;
}

Phi phi(unsigned e, std::uint64_t p, unsigned a) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) q *= p;
  Phi out{1, 1, 1};
  for (const auto& [r, v] : ppds(q, e)) {
    Int rv;
    mpz_pow_ui(rv.get_mpz_t(), r.get_mpz_t(), v);
    out.phi *= rv;
    if (r >= 2 * e + 1) {
      out.large *= rv;
    } else if (r == e + 1) {
      out.large *= rv / r;
    }
    if (mult_order(p, r) == static_cast<std::uint64_t>(a) * e) out.basic *= rv;
  }
  return out;
}

std::optional<Witness> classify_by_order(std::uint64_t order, unsigned d, std::uint64_t p, unsigned a) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < a; ++i) q *= p;
  const Int o(static_cast<unsigned long>(order));
  for (unsigned e = d / 2 + 1; e <= d; ++e) {
    std::optional<Witness> w;
    for (const auto& [r, v] : ppds(q, e)) {
      if (o % r != 0) continue;
      if (!w) w = Witness{e, false, false};
      if (r >= 2 * e + 1 || (r == e + 1 && v >= 2 && o % (r * r) == 0)) w->large = true;
      if (mult_order(p, r) == static_cast<std::uint64_t>(a) * e) w->basic = true;
    }
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace naive
