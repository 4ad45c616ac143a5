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

#include "ppd/oracle.hpp"

#include <deque>
#include <map>

#include "ppd/classify.hpp"

namespace ppd {

namespace {

std::size_t width_for(std::uint32_t q) {
  if (q <= 0x100) return 1;
  if (q <= 0x10000) return 2;
  return 4;
}

}  // namespace

EnumeratedGroup::EnumeratedGroup(FieldPtr field, std::size_t d, std::vector<Matrix> gens)
    : field_(std::move(field)), d_(d), width_(width_for(field_->order())), gens_(std::move(gens)) {}

std::string EnumeratedGroup::key(const Matrix& m) const {
  std::string k(d_ * d_ * width_, '\0');
  std::size_t pos = 0;
  for (Elem x : m.data()) {
    for (std::size_t b = 0; b < width_; ++b) k[pos++] = static_cast<char>((x >> (8 * b)) & 0xff);
  }
  return k;
}

Matrix EnumeratedGroup::decode(const std::string& key) const {
  Matrix m(field_, d_, d_);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      Elem x = 0;
      for (std::size_t b = 0; b < width_; ++b) {
        x |= static_cast<Elem>(static_cast<unsigned char>(key[pos++])) << (8 * b);
      }
      m.set(i, j, x);
    }
  }
  return m;
}

bool EnumeratedGroup::contains(const Matrix& m) const {
  if (m.rows() != d_ || m.cols() != d_) return false;
  return keys_.count(key(m)) != 0;
}

std::vector<Matrix> EnumeratedGroup::elements() const {
  std::vector<Matrix> out;
  out.reserve(keys_.size());
  for (const auto& k : keys_) out.push_back(decode(k));
  return out;
}

EnumeratedGroup enumerate(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "no generators");
  const FieldPtr& field = gens[0].field();
  const std::size_t d = gens[0].rows();
  EnumeratedGroup g(field, d, gens);
  const Matrix id = Matrix::identity(field, d);
  std::deque<Matrix> frontier{id};
  g.keys_.insert(g.key(id));
  while (!frontier.empty()) {
    const Matrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      Matrix y = mat_mul(x, s);
      if (g.keys_.insert(g.key(y)).second) {
        if (g.keys_.size() > cap) {
          throw Error(ErrorCode::kCapExceeded, "group has more than " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  return g;
}

mpq_class exact_ppd_proportion(const EnumeratedGroup& g, unsigned e) {
  // The witness depends only on the characteristic polynomial.
  std::map<std::vector<Elem>, bool> memo;
  std::size_t hits = 0;
  g.for_each([&](const Matrix& m) {
    const Poly c = mat_charpoly(m);
    auto it = memo.find(c.coeffs());
    if (it == memo.end()) {
      const auto w = classify_charpoly(c);
      it = memo.emplace(c.coeffs(), w && w->e == e).first;
    }
    if (it->second) ++hits;
  });
  mpq_class r(static_cast<unsigned long>(hits), static_cast<unsigned long>(g.order()));
  r.canonicalize();
  return r;
}

bool verify_singer_formula(const EnumeratedGroup& g, unsigned u) {
  const auto d = static_cast<unsigned>(g.dim());
  const BigInt phi = ppd_part(g.field()->order(), d);
  if (phi == 1) throw Error(ErrorCode::kNoPpdAtD, "q^d - 1 has no primitive prime divisor");
  mpq_class expected = mpq_class(1) - mpq_class(BigInt(1), phi);
  expected /= u;
  expected.canonicalize();
  return exact_ppd_proportion(g, d) == expected;
}

}  // namespace ppd
