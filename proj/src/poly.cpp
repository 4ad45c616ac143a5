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

#include "ppd/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gf2.hpp"

namespace ppd {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
  }
}

bool use_gf2(const FieldPtr& f) { return f->order() == 2; }

void check_modulus(const Poly& m) {
  if (m.is_zero()) throw Error(ErrorCode::kZeroModulus, "zero modulus");
  if (m.degree() < 1 || m.leading() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be monic of degree at least 1");
  }
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) throw Error(ErrorCode::kInvalidArgument, "coefficient out of range");
  }
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, Elem c) {
  return Poly(std::move(field), std::vector<Elem>{c});
}

Poly Poly::variable(FieldPtr field) { return monomial(std::move(field), 1, 1); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = *a.field();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const Field& f = *a.field();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const Field& f = *a.field();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = f.mul_add(x[i], y[j], out[i + j]);
  }
  return Poly(a.field(), std::move(out));
}

Poly scale(const Poly& a, Elem c) {
  const Field& f = *a.field();
  std::vector<Elem> out(a.coeffs());
  for (auto& v : out) v = f.mul(v, c);
  return Poly(a.field(), std::move(out));
}

void divmod(const Poly& a, const Poly& b, Poly* quotient, Poly* remainder) {
  check_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorCode::kZeroModulus, "division by the zero polynomial");
  const Field& f = *a.field();
  std::vector<Elem> r(a.coeffs());
  const auto& m = b.coeffs();
  const int db = b.degree();
  std::vector<Elem> q;
  if (a.degree() >= db) {
    q.assign(a.degree() - db + 1, 0);
    const Elem lead_inv = f.inv(b.leading());
    for (int k = a.degree(); k >= db; --k) {
      Elem c = r[k];
      if (c == 0) continue;
      c = f.mul(c, lead_inv);
      q[k - db] = c;
      const Elem nc = f.neg(c);
      for (int j = 0; j <= db; ++j) r[k - db + j] = f.mul_add(nc, m[j], r[k - db + j]);
    }
    r.resize(db);
  }
  if (quotient != nullptr) *quotient = Poly(a.field(), std::move(q));
  if (remainder != nullptr) *remainder = Poly(a.field(), std::move(r));
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q(a.field());
  divmod(a, b, &q, nullptr);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly r(a.field());
  divmod(a, b, nullptr, &r);
  return r;
}

Poly monic(const Poly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return scale(a, a.field()->inv(a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (use_gf2(a.field())) {
    return gf2::to_poly(gf2::gcd(gf2::from_poly(a), gf2::from_poly(b)), a.field());
  }
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly derivative(const Poly& a) {
  const Field& f = *a.field();
  if (a.degree() < 1) return Poly(a.field());
  std::vector<Elem> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i % f.characteristic())), a.coeff(i));
  }
  return Poly(a.field(), std::move(out));
}

Elem evaluate(const Poly& a, Elem x) {
  const Field& f = *a.field();
  Elem acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.mul_add(acc, x, a.coeff(i));
  return acc;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus) { return (a * b) % modulus; }

Poly poly_powmod(const Poly& base, const BigInt& exponent, const Poly& modulus) {
  check_same_field(base, modulus);
  check_modulus(modulus);
  if (exponent < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  if (use_gf2(base.field())) {
    return gf2::to_poly(
        gf2::powmod(gf2::from_poly(base), exponent, gf2::from_poly(modulus)), base.field());
  }
  Poly b = base % modulus;
  Poly result = Poly::constant(base.field(), 1) % modulus;
  const std::size_t bits = bit_length(exponent);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, b, modulus);
  }
  return result;
}

Poly poly_powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  return poly_powmod(base, big_from_u64(exponent), modulus);
}

namespace {

// f = g(t^p) -> g with coefficients replaced by their p-th roots.
Poly pth_root(const Poly& f) {
  const Field& fld = *f.field();
  const std::uint32_t p = fld.characteristic();
  std::vector<Elem> out(f.degree() / p + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fld.frobenius_root(f.coeff(i * p));
  return Poly(f.field(), std::move(out));
}

}  // namespace

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "square-free part of zero");
  if (use_gf2(f.field())) {
    return gf2::to_poly(gf2::squarefree_part(gf2::from_poly(f)), f.field());
  }
  Poly m = monic(f);
  if (m.degree() < 1) return m;
  Poly dm = derivative(m);
  if (dm.is_zero()) return squarefree_part(pth_root(m));
  Poly g = gcd(m, dm);
  Poly w = m / g;
  // Factors left in g after removing those of w occur with multiplicity
  // divisible by p, so g is then a p-th power.
  for (Poly c = gcd(g, w); c.degree() > 0; c = gcd(g, w)) g = g / c;
  if (g.degree() < 1) return w;
  return monic(w * squarefree_part(pth_root(g)));
}

std::vector<DegreeFactor> poly_sfdd(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::kInvalidArgument, "sfdd needs degree at least 1");
  std::vector<DegreeFactor> out;
  if (use_gf2(f.field())) {
    for (auto& [deg, prod] : gf2::sfdd(gf2::from_poly(f))) {
      out.push_back({deg, gf2::to_poly(prod, f.field())});
    }
    return out;
  }
  const std::uint64_t q = f.field()->order();
  Poly rem = squarefree_part(f);
  const Poly t = Poly::variable(f.field());
  Poly h = t % rem;
  for (unsigned m = 1; rem.degree() >= 2 * static_cast<int>(m); ++m) {
    h = poly_powmod(h, q, rem);
    Poly g = gcd(rem, h - t);
    if (g.degree() > 0) {
      out.push_back({m, g});
      rem = rem / g;
      h = h % rem;
    }
  }
  if (rem.degree() > 0) out.push_back({static_cast<unsigned>(rem.degree()), rem});
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  Poly m = monic(f);
  if (squarefree_part(m) != m) return false;
  auto parts = poly_sfdd(m);
  return parts.size() == 1 && parts[0].degree == static_cast<unsigned>(m.degree());
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) os << ' ';
    os << f.coeffs()[i];
  }
  return os.str();
}

Poly parse_poly(const FieldPtr& field, const std::string& text) {
  std::istringstream is(text);
  std::vector<Elem> coeffs;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad coefficient '" + tok + "'");
    }
    if (used != tok.size() || !field->contains(v)) {
      throw Error(ErrorCode::kParseError, "bad coefficient '" + tok + "'");
    }
    coeffs.push_back(static_cast<Elem>(v));
  }
  return Poly(field, std::move(coeffs));
}

}  // namespace ppd
