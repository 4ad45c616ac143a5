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

#include "ppd/classical.hpp"

#include <string>

namespace ppd {

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::kLinear: return "linear";
    case Family::kSymplectic: return "symplectic";
    case Family::kUnitary: return "unitary";
    case Family::kOrthogonalPlus: return "orthogonal-plus";
    case Family::kOrthogonalMinus: return "orthogonal-minus";
    case Family::kOrthogonalCircle: return "orthogonal-circle";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "linear" || name == "sl" || name == "gl") return Family::kLinear;
  if (name == "symplectic" || name == "sp") return Family::kSymplectic;
  if (name == "unitary" || name == "su") return Family::kUnitary;
  if (name == "orthogonal-plus" || name == "o+") return Family::kOrthogonalPlus;
  if (name == "orthogonal-minus" || name == "o-") return Family::kOrthogonalMinus;
  if (name == "orthogonal-circle" || name == "o" || name == "o0") return Family::kOrthogonalCircle;
  throw Error(ErrorCode::kInvalidCase, "unknown group case '" + name + "'");
}

bool is_orthogonal(Family f) noexcept {
  return f == Family::kOrthogonalPlus || f == Family::kOrthogonalMinus ||
         f == Family::kOrthogonalCircle;
}

void validate_case(const GroupCase& c) {
  if (!c.field) throw Error(ErrorCode::kInvalidCase, "missing field");
  if (c.d < 1) throw Error(ErrorCode::kInvalidCase, "dimension must be positive");
  const bool even = c.d % 2 == 0;
  switch (c.family) {
    case Family::kLinear:
      break;
    case Family::kSymplectic:
    case Family::kOrthogonalPlus:
    case Family::kOrthogonalMinus:
      if (!even) {
        throw Error(ErrorCode::kInvalidCase,
                    std::string(family_name(c.family)) + " needs even dimension");
      }
      break;
    case Family::kOrthogonalCircle:
      if (even) throw Error(ErrorCode::kInvalidCase, "orthogonal-circle needs odd dimension");
      if (c.field->characteristic() == 2) {
        throw Error(ErrorCode::kInvalidCase, "orthogonal-circle needs odd q");
      }
      break;
    case Family::kUnitary:
      if (c.field->degree() % 2 != 0) throw Error(ErrorCode::kInvalidCase, "unitary needs square q");
      break;
  }
}

const char* form_kind_name(FormKind k) noexcept {
  switch (k) {
    case FormKind::kNone: return "none";
    case FormKind::kAlternating: return "alternating";
    case FormKind::kSesquilinear: return "sesquilinear";
    case FormKind::kQuadratic: return "quadratic";
  }
  return "?";
}

FormKind parse_form_kind(const std::string& name) {
  if (name == "none") return FormKind::kNone;
  if (name == "alternating") return FormKind::kAlternating;
  if (name == "sesquilinear") return FormKind::kSesquilinear;
  if (name == "quadratic") return FormKind::kQuadratic;
  throw Error(ErrorCode::kParseError, "unknown form kind '" + name + "'");
}

const char* level_name(Level l) noexcept {
  switch (l) {
    case Level::kOmega: return "omega";
    case Level::kSpecial: return "so";
    case Level::kIsometry: return "full";
    case Level::kSimilitude: return "similitude";
  }
  return "?";
}

Level parse_level(const std::string& name) {
  if (name == "omega") return Level::kOmega;
  if (name == "so" || name == "special") return Level::kSpecial;
  if (name == "full" || name == "isometry") return Level::kIsometry;
  if (name == "similitude" || name == "delta") return Level::kSimilitude;
  throw Error(ErrorCode::kInvalidArgument, "unknown level '" + name + "'");
}

namespace {

Elem least_nonsquare(const Field& f) {
  for (Elem x = 1; x < f.order(); ++x) {
    if (!f.is_square(x)) return x;
  }
  throw Error(ErrorCode::kInvalidArgument, "every element is a square");
}

Elem conj(const Field& f, Elem x, unsigned automorphism_order) {
  return automorphism_order == 2 ? f.conjugate(x) : x;
}

// Column vector c with c[i] = (B (v^sigma)^T)[i], so that kappa(x, v) = x . c.
Vec form_column(const Matrix& b, const Vec& v, unsigned automorphism_order) {
  const Field& f = *b.field();
  Vec c(b.rows(), 0);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b.at(i, j) != 0 && v[j] != 0) {
        acc = f.mul_add(b.at(i, j), conj(f, v[j], automorphism_order), acc);
      }
    }
    c[i] = acc;
  }
  return c;
}

// m += s * (col outer row).
void add_outer(Matrix* m, Elem s, const Vec& col, const Vec& row) {
  const Field& f = *m->field();
  if (s == 0) return;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i] == 0) continue;
    const Elem ci = f.mul(s, col[i]);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) m->set(i, j, f.mul_add(ci, row[j], m->at(i, j)));
    }
  }
}

Vec unit(std::size_t d, std::size_t i, Elem c = 1) {
  Vec v(d, 0);
  v[i] = c;
  return v;
}

Elem quad_value(const Matrix& u, const Vec& v) {
  const Field& f = *u.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = i; j < u.cols(); ++j) {
      if (u.at(i, j) != 0 && v[j] != 0) acc = f.add(acc, f.mul(f.mul(v[i], u.at(i, j)), v[j]));
    }
  }
  return acc;
}

// GF(p)-basis 1, w, ..., w^{a-1} of GF(q), w the primitive element.
std::vector<Elem> additive_basis(const Field& f) {
  std::vector<Elem> out;
  for (unsigned i = 0; i < f.degree(); ++i) out.push_back(f.exp(i));
  return out;
}

std::vector<Matrix> linear_generators(const GroupCase& c, Level level) {
  const Field& f = *c.field;
  const std::size_t d = c.d;
  std::vector<Matrix> gens;
  if (d == 1) {
    gens.push_back(level == Level::kIsometry || level == Level::kSimilitude
                       ? Matrix::scalar(c.field, 1, f.primitive_element())
                       : Matrix::identity(c.field, 1));
    return gens;
  }
  for (Elem t : additive_basis(f)) {
    Matrix x = Matrix::identity(c.field, d);
    x.set(0, 1, t);
    gens.push_back(std::move(x));
  }
  // e_i -> e_{i+1}, with a sign on the wrap-around entry when the cycle is odd.
  Matrix w(c.field, d, d);
  for (std::size_t i = 0; i < d; ++i) w.set(i, (i + 1) % d, 1);
  if (d % 2 == 0) w.set(d - 1, 0, f.neg(1));
  gens.push_back(std::move(w));
  if (level == Level::kIsometry || level == Level::kSimilitude) {
    Matrix h = Matrix::identity(c.field, d);
    h.set(0, 0, f.primitive_element());
    gens.push_back(std::move(h));
  }
  return gens;
}

// Elements of the unipotent radicals of the stabilizers of <e_0> and
// <e_{d-1}>. Symplectic: x -> x + k(x,u)w + k(x,w)u + b k(x,u)u.
std::vector<Matrix> symplectic_generators(const GroupCase& c, Level level) {
  const Field& f = *c.field;
  const std::size_t d = c.d;
  const FormData form = standard_form(c);
  const Matrix& b = form.gram;
  std::vector<Matrix> gens;
  const auto basis = additive_basis(f);
  for (std::size_t ui : {std::size_t{0}, d - 1}) {
    const Vec u = unit(d, ui);
    const Vec cu = form_column(b, u, 1);
    for (Elem beta : basis) {
      Matrix g = Matrix::identity(c.field, d);
      add_outer(&g, beta, cu, u);
      gens.push_back(std::move(g));
    }
    for (std::size_t j = 1; j + 1 < d; ++j) {
      for (Elem s : basis) {
        const Vec w = unit(d, j, s);
        Matrix g = Matrix::identity(c.field, d);
        add_outer(&g, 1, cu, w);
        add_outer(&g, 1, form_column(b, w, 1), u);
        gens.push_back(std::move(g));
      }
    }
  }
  if (level == Level::kSimilitude) {
    Matrix h = Matrix::identity(c.field, d);
    for (std::size_t i = 0; i < d / 2; ++i) h.set(i, i, f.primitive_element());
    gens.push_back(std::move(h));
  }
  return gens;
}

// Unitary: x -> x + k(x,u)w - k(x,w)u + b k(x,u)u with b + b^sigma = -k(w,w).
std::vector<Matrix> unitary_generators(const GroupCase& c, Level level) {
  const Field& f = *c.field;
  const std::size_t d = c.d;
  if (d < 2) throw Error(ErrorCode::kUnsupportedCase, "unitary groups need d >= 2");
  const FormData form = standard_form(c);
  const Matrix& b = form.gram;
  std::uint64_t q0 = 1;
  for (unsigned i = 0; i < f.degree() / 2; ++i) q0 *= f.characteristic();

  auto trace = [&](Elem x) { return f.add(x, f.conjugate(x)); };
  auto solve_trace = [&](Elem target) {
    for (Elem x = 0; x < f.order(); ++x) {
      if (trace(x) == target) return x;
    }
    throw Error(ErrorCode::kInconsistent, "trace equation has no solution");
  };
  Elem beta0 = 0;
  for (Elem x = 1; x < f.order() && beta0 == 0; ++x) {
    if (trace(x) == 0) beta0 = x;
  }
  // GF(p)-basis of the trace-zero line beta0 * GF(q0).
  std::vector<Elem> trace_zero;
  const Elem w0 = f.exp(q0 + 1);
  for (unsigned i = 0; i < f.degree() / 2; ++i) trace_zero.push_back(f.mul(beta0, f.pow(w0, i)));

  std::vector<Matrix> gens;
  for (std::size_t ui : {std::size_t{0}, d - 1}) {
    const Vec u = unit(d, ui);
    const Vec cu = form_column(b, u, 2);
    for (Elem beta : trace_zero) {
      Matrix g = Matrix::identity(c.field, d);
      add_outer(&g, beta, cu, u);
      gens.push_back(std::move(g));
    }
    for (std::size_t j = 1; j + 1 < d; ++j) {
      for (Elem s : additive_basis(f)) {
        const Vec w = unit(d, j, s);
        const Vec cw = form_column(b, w, 2);
        Elem kww = 0;
        for (std::size_t i = 0; i < d; ++i) kww = f.mul_add(w[i], cw[i], kww);
        const Elem beta = kww == 0 ? 0 : solve_trace(f.neg(kww));
        Matrix g = Matrix::identity(c.field, d);
        add_outer(&g, 1, cu, w);
        add_outer(&g, f.neg(1), cw, u);
        add_outer(&g, beta, cu, u);
        gens.push_back(std::move(g));
      }
    }
  }
  if (level == Level::kIsometry || level == Level::kSimilitude) {
    const Elem w = f.primitive_element();
    Matrix h = Matrix::identity(c.field, d);
    h.set(0, 0, w);
    h.set(d - 1, d - 1, f.inv(f.conjugate(w)));
    gens.push_back(std::move(h));
  }
  if (level == Level::kSimilitude) gens.push_back(Matrix::scalar(c.field, d, f.primitive_element()));
  return gens;
}

// Orthogonal (odd q): Eichler transformations
// x -> x + B(x,u)w - B(x,w)u - Q(w)B(x,u)u, u in {e_0, e_{d-1}}, w in <e_0,e_{d-1}>^perp.
std::vector<Matrix> orthogonal_generators(const GroupCase& c, Level level) {
  const Field& f = *c.field;
  const std::size_t d = c.d;
  if (f.characteristic() == 2) {
    throw Error(ErrorCode::kUnsupportedCase, "orthogonal groups in characteristic 2");
  }
  if (d < 3) throw Error(ErrorCode::kUnsupportedCase, "orthogonal groups need d >= 3");
  const FormData form = standard_form(c);
  const Matrix bil = polar_gram(form);
  std::vector<Matrix> gens;
  for (std::size_t ui : {std::size_t{0}, d - 1}) {
    const Vec u = unit(d, ui);
    const Vec cu = form_column(bil, u, 1);
    for (std::size_t j = 1; j + 1 < d; ++j) {
      for (Elem s : additive_basis(f)) {
        const Vec w = unit(d, j, s);
        Matrix g = Matrix::identity(c.field, d);
        add_outer(&g, 1, cu, w);
        add_outer(&g, f.neg(1), form_column(bil, w, 1), u);
        add_outer(&g, f.neg(quad_value(form.gram, w)), cu, u);
        gens.push_back(std::move(g));
      }
    }
  }
  if (level == Level::kOmega) return gens;

  // Reflections in e_0 + e_{d-1} (Q = 1) and e_0 + nu e_{d-1} (Q = nu) have
  // different spinor norms.
  const Elem nu = least_nonsquare(f);
  auto reflection = [&](Elem t) {
    Vec v(d, 0);
    v[0] = 1;
    v[d - 1] = t;
    const Elem qv = quad_value(form.gram, v);
    Matrix r = Matrix::identity(c.field, d);
    add_outer(&r, f.neg(f.inv(qv)), form_column(bil, v, 1), v);
    return r;
  };
  const Matrix ra = reflection(1);
  const Matrix rb = reflection(nu);
  if (level == Level::kSpecial) {
    gens.push_back(mat_mul(ra, rb));
    return gens;
  }
  gens.push_back(ra);
  gens.push_back(rb);
  if (level == Level::kIsometry) return gens;

  const Elem w = f.primitive_element();
  Matrix h = Matrix::identity(c.field, d);
  switch (c.family) {
    case Family::kOrthogonalCircle:
      h = Matrix::scalar(c.field, d, w);
      break;
    case Family::kOrthogonalPlus:
      for (std::size_t i = 0; i < d / 2; ++i) h.set(i, i, w);
      break;
    case Family::kOrthogonalMinus: {
      const std::size_t m = d / 2;
      for (std::size_t i = 0; i + 1 < m; ++i) h.set(i, i, w);
      // Multiplication by z0 = x0 + y0 sqrt(nu) on the anisotropic plane,
      // where Q is the norm form and N(z0) = w.
      bool found = false;
      for (Elem x0 = 0; x0 < f.order() && !found; ++x0) {
        for (Elem y0 = 0; y0 < f.order() && !found; ++y0) {
          if (f.sub(f.mul(x0, x0), f.mul(nu, f.mul(y0, y0))) == w) {
            h.set(m - 1, m - 1, x0);
            h.set(m - 1, m, y0);
            h.set(m, m - 1, f.mul(nu, y0));
            h.set(m, m, x0);
            found = true;
          }
        }
      }
      break;
    }
    default:
      break;
  }
  gens.push_back(std::move(h));
  return gens;
}

}  // namespace

FormData standard_form(const GroupCase& c) {
  validate_case(c);
  const Field& f = *c.field;
  const std::size_t d = c.d;
  FormData form;
  form.gram = Matrix(c.field, d, d);
  switch (c.family) {
    case Family::kLinear:
      form.kind = FormKind::kNone;
      form.gram = Matrix(c.field, 0, 0);
      break;
    case Family::kSymplectic:
      form.kind = FormKind::kAlternating;
      for (std::size_t i = 0; i < d; ++i) form.gram.set(i, d - 1 - i, i < d / 2 ? 1 : f.neg(1));
      break;
    case Family::kUnitary:
      form.kind = FormKind::kSesquilinear;
      form.automorphism_order = 2;
      for (std::size_t i = 0; i < d; ++i) form.gram.set(i, d - 1 - i, 1);
      break;
    case Family::kOrthogonalPlus:
      form.kind = FormKind::kQuadratic;
      for (std::size_t i = 0; i < d / 2; ++i) form.gram.set(i, d - 1 - i, 1);
      break;
    case Family::kOrthogonalCircle:
      form.kind = FormKind::kQuadratic;
      for (std::size_t i = 0; i < d / 2; ++i) form.gram.set(i, d - 1 - i, 1);
      form.gram.set(d / 2, d / 2, 1);
      break;
    case Family::kOrthogonalMinus: {
      form.kind = FormKind::kQuadratic;
      const std::size_t m = d / 2;
      for (std::size_t i = 0; i + 1 < m; ++i) form.gram.set(i, d - 1 - i, 1);
      form.gram.set(m - 1, m - 1, 1);
      form.gram.set(m, m, f.neg(least_nonsquare(f)));
      break;
    }
  }
  return form;
}

Matrix polar_gram(const FormData& form) {
  if (form.kind != FormKind::kQuadratic) return form.gram;
  return mat_add(form.gram, mat_transpose(form.gram));
}

Elem similitude_scalar(const Matrix& g, const FormData& form) {
  if (form.kind == FormKind::kNone) return 1;
  const Matrix& b = form.gram;
  if (g.field() != b.field() || g.rows() != b.rows() || !g.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix does not match the form");
  }
  const Field& f = *g.field();
  const std::size_t d = g.rows();
  Matrix gs = g;
  if (form.automorphism_order == 2) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) gs.set(i, j, f.conjugate(g.at(i, j)));
    }
  }
  Matrix m = mat_mul(mat_mul(g, b), mat_transpose(gs));
  if (form.kind == FormKind::kQuadratic) {
    // Upper triangular representative of the same quadratic form.
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        m.set(i, j, f.add(m.at(i, j), m.at(j, i)));
        m.set(j, i, 0);
      }
    }
  }
  Elem lambda = 0;
  for (std::size_t i = 0; i < d * d && lambda == 0; ++i) {
    const Elem bv = b.data()[i];
    if (bv != 0) lambda = f.div(m.data()[i], bv);
  }
  if (lambda == 0 || mat_scale(b, lambda) != m) {
    throw Error(ErrorCode::kNotSimilitude, "matrix does not preserve the form up to a scalar");
  }
  return lambda;
}

std::vector<Matrix> standard_generators(const GroupCase& c, Level level) {
  validate_case(c);
  switch (c.family) {
    case Family::kLinear: return linear_generators(c, level);
    case Family::kSymplectic: return symplectic_generators(c, level);
    case Family::kUnitary: return unitary_generators(c, level);
    default: return orthogonal_generators(c, level);
  }
}

GroupInput standard_group(const GroupCase& c, Level level) {
  GroupInput g;
  g.group_case = c;
  g.form = standard_form(c);
  g.generators = standard_generators(c, level);
  return g;
}

namespace {

FormKind expected_kind(Family f) {
  switch (f) {
    case Family::kLinear: return FormKind::kNone;
    case Family::kSymplectic: return FormKind::kAlternating;
    case Family::kUnitary: return FormKind::kSesquilinear;
    default: return FormKind::kQuadratic;
  }
}

void validate_form(const GroupCase& c, const FormData& form) {
  const Field& f = *c.field;
  if (form.kind != expected_kind(c.family)) {
    throw Error(ErrorCode::kValidationError, std::string("form kind ") + form_kind_name(form.kind) +
                                                 " does not match case " + family_name(c.family));
  }
  if (form.kind == FormKind::kNone) return;
  const Matrix& b = form.gram;
  if (b.field() != c.field || b.rows() != c.d || b.cols() != c.d) {
    throw Error(ErrorCode::kValidationError, "Gram matrix has the wrong shape or field");
  }
  const std::size_t d = c.d;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Elem x = b.at(i, j), y = b.at(j, i);
      bool ok = true;
      switch (form.kind) {
        case FormKind::kAlternating:
          ok = (i == j) ? x == 0 : x == f.neg(y);
          break;
        case FormKind::kSesquilinear:
          ok = x == f.conjugate(y);
          break;
        case FormKind::kQuadratic:
          ok = i <= j || x == 0;
          break;
        default:
          break;
      }
      if (!ok) throw Error(ErrorCode::kValidationError, "Gram matrix is not of the declared kind");
    }
  }
  if (mat_det(polar_gram(form)) == 0) throw Error(ErrorCode::kValidationError, "form is degenerate");
  if (form.kind == FormKind::kSesquilinear && form.automorphism_order != 2) {
    throw Error(ErrorCode::kValidationError, "sesquilinear form needs the involution");
  }
}

}  // namespace

void validate_group_input(const GroupInput& g) {
  try {
    validate_case(g.group_case);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, e.what());
  }
  validate_form(g.group_case, g.form);
  if (g.generators.empty()) throw Error(ErrorCode::kValidationError, "no generators");
  for (std::size_t k = 0; k < g.generators.size(); ++k) {
    const Matrix& m = g.generators[k];
    const std::string name = "generator " + std::to_string(k + 1);
    if (m.field() != g.group_case.field || m.rows() != g.group_case.d || !m.is_square()) {
      throw Error(ErrorCode::kValidationError, name + " has the wrong shape or field");
    }
    if (mat_det(m) == 0) throw Error(ErrorCode::kValidationError, name + " is singular");
    if (g.form.kind != FormKind::kNone) {
      try {
        similitude_scalar(m, g.form);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotSimilitude) throw;
        throw Error(ErrorCode::kValidationError, name + " does not preserve the form modulo scalars");
      }
    }
  }
}

BigInt group_order_gl(unsigned d, std::uint64_t q) {
  if (d > 4096) throw Error(ErrorCode::kOverflow, "dimension exceeds 4096");
  BigInt order = big_pow(q, static_cast<unsigned long>(d) * (d - (d > 0 ? 1 : 0)) / 2);
  for (unsigned i = 1; i <= d; ++i) order *= big_pow(q, i) - 1;
  return order;
}

}  // namespace ppd
