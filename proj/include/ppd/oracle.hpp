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

#ifndef PPD_ORACLE_HPP
#define PPD_ORACLE_HPP

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include <gmpxx.h>

#include "ppd/matrix.hpp"

namespace ppd {

// A group enumerated by breadth-first search over right multiplication by
// the generators. Elements are kept as row-major byte strings.
class EnumeratedGroup {
 public:
  EnumeratedGroup(FieldPtr field, std::size_t d, std::vector<Matrix> gens);

  std::size_t order() const noexcept { return keys_.size(); }
  std::size_t dim() const noexcept { return d_; }
  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Matrix>& generators() const noexcept { return gens_; }

  bool contains(const Matrix& m) const;
  std::string key(const Matrix& m) const;
  Matrix decode(const std::string& key) const;
  std::vector<Matrix> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& k : keys_) f(decode(k));
  }

 private:
  friend EnumeratedGroup enumerate(const std::vector<Matrix>& gens, std::size_t cap);

  FieldPtr field_;
  std::size_t d_;
  std::size_t width_;
  std::vector<Matrix> gens_;
  std::unordered_set<std::string> keys_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 2000000;

// CAP_EXCEEDED once more than `cap` elements are found.
EnumeratedGroup enumerate(const std::vector<Matrix>& gens, std::size_t cap = kDefaultEnumerationCap);

// |{g : classify_element(g) witnesses e}| / |G|.
mpq_class exact_ppd_proportion(const EnumeratedGroup& g, unsigned e);

// exact_ppd_proportion(G, d) == (1/u)(1 - 1/Phi(d,q)). NO_PPD_AT_D if Phi = 1.
bool verify_singer_formula(const EnumeratedGroup& g, unsigned u);

}  // namespace ppd

#endif  // PPD_ORACLE_HPP
