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

#ifndef PPD_CLASSICAL_HPP
#define PPD_CLASSICAL_HPP

#include <string>
#include <vector>

#include "ppd/bigint.hpp"
#include "ppd/field.hpp"
#include "ppd/matrix.hpp"

namespace ppd {

enum class Family {
  kLinear,
  kSymplectic,
  kUnitary,
  kOrthogonalPlus,
  kOrthogonalMinus,
  kOrthogonalCircle,
};

const char* family_name(Family f) noexcept;
// Accepts the long names and the short forms sl, sp, su, o+, o-, o.
Family parse_family(const std::string& name);
bool is_orthogonal(Family f) noexcept;

struct GroupCase {
  Family family = Family::kLinear;
  unsigned d = 0;
  FieldPtr field;
};

// INVALID_CASE unless: even d for symplectic and orthogonal +/-, odd d and odd
// q for orthogonal-circle, square q for unitary, d >= 1.
void validate_case(const GroupCase& c);

enum class FormKind { kNone, kAlternating, kSesquilinear, kQuadratic };

const char* form_kind_name(FormKind k) noexcept;
FormKind parse_form_kind(const std::string& name);

struct FormData {
  FormKind kind = FormKind::kNone;
  // For quadratic forms the upper triangular U with Q(v) = v U v^T.
  Matrix gram;
  // 2 for sesquilinear forms (x -> x^{sqrt q}), else 1.
  unsigned automorphism_order = 1;
};

struct GroupInput {
  GroupCase group_case;
  FormData form;
  std::vector<Matrix> generators;
};

// The canonical form for a case, on a basis e_0..e_{d-1} with hyperbolic
// pairs (e_i, e_{d-1-i}):
//   symplectic        B[i][d-1-i] = 1 (i < d/2), -1 (i >= d/2)
//   unitary           B[i][d-1-i] = 1, sesquilinear in the second argument
//   orthogonal-plus   Q = sum_{i<d/2} x_i x_{d-1-i}
//   orthogonal-circle Q = sum_{i<m} x_i x_{d-1-i} + x_m^2,  d = 2m + 1
//   orthogonal-minus  Q = sum_{i<m-1} x_i x_{d-1-i} + x_{m-1}^2 - nu x_m^2,
//                     d = 2m, nu the least non-square
FormData standard_form(const GroupCase& c);

// The bilinear form associated with a quadratic form: U + U^T.
Matrix polar_gram(const FormData& form);

// The lambda with g B (g^sigma)^T = lambda B, or Q(vg) = lambda Q(v) for all v.
// NOT_SIMILITUDE if there is none. Identity-like on kNone forms: returns 1.
Elem similitude_scalar(const Matrix& g, const FormData& form);

enum class Level {
  kOmega,       // SL, Sp, SU, Omega
  kSpecial,     // determinant-one isometries: SL, Sp, SU, SO
  kIsometry,    // GL, Sp, GU, O
  kSimilitude,  // GL, GSp, GU.Z, GO
};

const char* level_name(Level l) noexcept;
// omega, so (alias special), full (alias isometry), similitude (alias delta).
Level parse_level(const std::string& name);

// Generators for the requested level of the classical group preserving
// standard_form(c). UNSUPPORTED_CASE for orthogonal groups in characteristic 2
// or of dimension below 3.
std::vector<Matrix> standard_generators(const GroupCase& c, Level level);
GroupInput standard_group(const GroupCase& c, Level level);

// Field, shape, nonsingularity and similitude of every generator.
// VALIDATION_ERROR naming the first failing generator.
void validate_group_input(const GroupInput& g);

// q^{d(d-1)/2} prod_{i=1..d} (q^i - 1).
BigInt group_order_gl(unsigned d, std::uint64_t q);

}  // namespace ppd

#endif  // PPD_CLASSICAL_HPP
