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

// Group fixtures shared by the tests: standard groups and hand-built
// subgroups that must never be recognised as containing Omega.

#ifndef PPD_TESTS_FIXTURES_HPP
#define PPD_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "ppd/classical.hpp"
#include "support/oracles.hpp"

namespace fixtures {

ppd::GroupInput standard(ppd::Family family, unsigned d, std::uint64_t q,
                         ppd::Level level = ppd::Level::kOmega);

naive::Field naive_field(const ppd::FieldPtr& f);
naive::Mat to_naive(const ppd::Matrix& m);

// The matrix of x -> x * alpha on GF(p^k) over GF(p), basis 1, t, .., t^{k-1}.
ppd::Matrix multiplication_matrix(const ppd::FieldPtr& ext, ppd::Elem alpha);
// GL(n, p^k) -> GL(nk, p) by replacing entries with multiplication matrices.
ppd::Matrix blow_up(const ppd::Matrix& a);
// The p-th power map on GF(p^k)^n as a GF(p)-linear map of GF(p)^{nk}.
ppd::Matrix frobenius_block(const ppd::FieldPtr& ext, unsigned n);

// GL(n, p^k).k inside GL(nk, p).
ppd::GroupInput extension_field(unsigned n, std::uint64_t p, unsigned k);
// Monomial matrices GL(1,q) wr S_d inside GL(d,q).
ppd::GroupInput monomial(unsigned d, std::uint64_t q);
// GL(d,q0) times the scalars of GF(q) inside GL(d,q).
ppd::GroupInput subfield_scalars(unsigned d, std::uint64_t q0, std::uint64_t q);
// Block upper triangular group with diagonal blocks SL(k,q), SL(d-k,q).
ppd::GroupInput reducible(unsigned d, unsigned k, std::uint64_t q);
// S_n on the sum-zero vectors of GF(2)^n, n odd (dimension n - 1).
ppd::GroupInput deleted_permutation(unsigned n);

struct Named {
  std::string name;
  ppd::GroupInput group;
};
// Desk-scale negatives for the soundness checks.
std::vector<Named> negative_fixtures();

}  // namespace fixtures

#endif  // PPD_TESTS_FIXTURES_HPP
