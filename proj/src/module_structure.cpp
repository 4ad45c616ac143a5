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

#include "ppd/module_structure.hpp"

#include <algorithm>

#include "ppd/sampler.hpp"

namespace ppd {

namespace {

constexpr unsigned kSummands = 3;
constexpr unsigned kMaxWordLength = 6;
constexpr std::uint32_t kRootSearchLimit = 4096;
constexpr std::size_t kFactorsPerAttempt = 3;

Matrix random_algebra_element(const std::vector<Matrix>& gens, Rng* rng) {
  const FieldPtr& field = gens[0].field();
  const std::size_t d = gens[0].rows();
  Matrix theta(field, d, d);
  for (unsigned s = 0; s < kSummands; ++s) {
    const unsigned len = 1 + static_cast<unsigned>(rng->below(kMaxWordLength));
    Matrix word = gens[rng->below(gens.size())];
    for (unsigned k = 1; k < len; ++k) word = mat_mul(word, gens[rng->below(gens.size())]);
    const Elem c = static_cast<Elem>(1 + rng->below(field->order() - 1));
    theta = mat_add(theta, mat_scale(word, c));
  }
  return theta;
}

// Irreducible factors of c usable without equal-degree splitting, smallest
// degree first: whole distinct-degree parts that are irreducible, and linear
// factors found by root search over small fields.
std::vector<Poly> usable_factors(const Poly& c) {
  std::vector<Poly> out;
  const FieldPtr& field = c.field();
  for (const auto& part : poly_sfdd(c)) {
    if (part.product.degree() == static_cast<int>(part.degree)) {
      out.push_back(part.product);
    } else if (part.degree == 1 && field->order() <= kRootSearchLimit) {
      for (Elem x = 0; x < field->order(); ++x) {
        if (evaluate(part.product, x) == 0) {
          out.push_back(Poly(field, {field->neg(x), 1}));
          if (out.size() >= kFactorsPerAttempt) break;
        }
      }
    }
    if (out.size() >= kFactorsPerAttempt) break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return out;
}

Matrix first_row(const Matrix& m) {
  Matrix r(m.field(), 1, m.cols());
  std::copy(m.row(0), m.row(0) + m.cols(), r.row(0));
  return r;
}

}  // namespace

const char* irreducibility_name(Irreducibility s) noexcept {
  switch (s) {
    case Irreducibility::kIrreducible: return "IRREDUCIBLE";
    case Irreducibility::kReducible: return "REDUCIBLE";
    case Irreducibility::kInconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

IrreducibilityReport is_irreducible(const std::vector<Matrix>& gens, unsigned max_attempts,
                                    std::uint64_t seed) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "no generators");
  const std::size_t d = gens[0].rows();
  IrreducibilityReport report;
  if (d == 1) {
    report.status = Irreducibility::kIrreducible;
    return report;
  }
  std::vector<Matrix> dual_gens;
  for (const auto& g : gens) dual_gens.push_back(mat_transpose(g));

  Rng rng(seed);
  for (unsigned attempt = 1; attempt <= max_attempts; ++attempt) {
    report.attempts = attempt;
    const Matrix theta = random_algebra_element(gens, &rng);
    for (const Poly& h : usable_factors(mat_charpoly(theta))) {
      const Matrix ht = mat_poly_eval(h, theta);
      const Matrix kernel = mat_nullspace(ht);
      const Matrix span = spin(first_row(kernel), gens);
      if (span.rows() < d) {
        report.status = Irreducibility::kReducible;
        report.witness = span;
        return report;
      }
      if (kernel.rows() != static_cast<std::size_t>(h.degree())) continue;
      const Matrix dual_kernel = mat_nullspace(mat_transpose(ht));
      const Matrix dual_span = spin(first_row(dual_kernel), dual_gens);
      if (dual_span.rows() < d) {
        report.status = Irreducibility::kReducible;
        report.witness = right_nullspace(dual_span);
        return report;
      }
      report.status = Irreducibility::kIrreducible;
      return report;
    }
  }
  report.status = Irreducibility::kInconclusive;
  return report;
}

IrreducibilityReport is_irreducible(const GroupInput& g, unsigned max_attempts, std::uint64_t seed) {
  return is_irreducible(g.generators, max_attempts, seed);
}

bool is_invariant_subspace(const Matrix& basis, const std::vector<Matrix>& gens) {
  if (basis.rows() == 0) return true;
  EchelonBasis eb(basis.field(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) eb.insert(basis.row_vec(i));
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      if (!eb.contains(vec_mat_mul(basis.row_vec(i), g))) return false;
    }
  }
  return true;
}

// The solution space is refined one matrix at a time: with X ranging over
// the span of the current basis X_1..X_k, X m = m X is the left kernel of
// the k x d^2 matrix whose rows are X_i m - m X_i.
std::size_t centralizer_dim(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw Error(ErrorCode::kInvalidArgument, "no matrices");
  const FieldPtr& field = mats[0].field();
  const std::size_t d = mats[0].rows();
  const std::size_t n = d * d;
  std::vector<Matrix> basis;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Matrix e(field, d, d);
      e.set(a, b, 1);
      basis.push_back(std::move(e));
    }
  }
  for (const auto& m : mats) {
    if (basis.empty()) break;
    Matrix images(field, basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Matrix c = mat_sub(mat_mul(basis[i], m), mat_mul(m, basis[i]));
      std::copy(c.data().begin(), c.data().end(), images.row(i));
    }
    const Matrix coeffs = mat_nullspace(images);
    std::vector<Matrix> next;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
      Matrix x(field, d, d);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs.at(r, i) != 0) x = mat_add(x, mat_scale(basis[i], coeffs.at(r, i)));
      }
      next.push_back(std::move(x));
    }
    basis = std::move(next);
  }
  return basis.size();
}

}  // namespace ppd
