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

#include "ppd/group_file.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace ppd {

namespace {

void write_rows(std::ostringstream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
    out << '\n';
  }
}

class Reader {
 public:
  explicit Reader(const std::string& text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_) + ": " + what);
  }

  // Next non-blank line split on single spaces.
  std::vector<std::string> next(const char* expected) {
    while (pos_ < lines_.size() && lines_[pos_].empty()) ++pos_;
    if (pos_ >= lines_.size()) {
      line_ = lines_.size() + 1;
      fail(std::string("unexpected end of file, expected ") + expected);
    }
    line_ = ++pos_;
    const std::string& s = lines_[pos_ - 1];
    std::vector<std::string> toks;
    std::size_t start = 0;
    for (;;) {
      const std::size_t sp = s.find(' ', start);
      toks.push_back(s.substr(start, sp == std::string::npos ? std::string::npos : sp - start));
      if (sp == std::string::npos) break;
      start = sp + 1;
    }
    for (const auto& t : toks) {
      if (t.empty()) fail("stray whitespace");
    }
    return toks;
  }

  std::uint64_t number(const std::string& tok) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("not a number: " + tok);
    return v;
  }

  bool at_end() {
    while (pos_ < lines_.size() && lines_[pos_].empty()) ++pos_;
    return pos_ >= lines_.size();
  }

  Matrix matrix(const FieldPtr& field, std::size_t d) {
    Matrix m(field, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto toks = next("matrix row");
      if (toks.size() != d) fail("expected " + std::to_string(d) + " entries");
      for (std::size_t j = 0; j < d; ++j) {
        const std::uint64_t v = number(toks[j]);
        if (v >= field->order()) fail("entry " + toks[j] + " is not a field element");
        m.set(i, j, static_cast<Elem>(v));
      }
    }
    return m;
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

}  // namespace

std::string write_group_file(const GroupInput& g) {
  const GroupCase& c = g.group_case;
  std::ostringstream out;
  out << "ppdgrp 1\n";
  out << c.field->characteristic() << ' ' << c.field->degree() << ' ' << c.d << ' '
      << g.generators.size() << ' ' << family_name(c.family) << '\n';
  if (c.field->degree() > 1) {
    const auto& mod = c.field->modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) {
      if (i) out << ' ';
      out << mod[i];
    }
    out << '\n';
  }
  if (c.family != Family::kLinear) {
    out << "form " << form_kind_name(g.form.kind) << '\n';
    write_rows(out, g.form.gram);
  }
  for (const auto& m : g.generators) {
    out << "\nmat\n";
    write_rows(out, m);
  }
  return out.str();
}

GroupInput parse_group_file(const std::string& text) {
  Reader r(text);
  auto toks = r.next("header");
  if (toks.size() != 2 || toks[0] != "ppdgrp" || toks[1] != "1") r.fail("expected 'ppdgrp 1'");

  toks = r.next("p a d k case");
  if (toks.size() != 5) r.fail("expected 'p a d k case'");
  const std::uint64_t p = r.number(toks[0]);
  const std::uint64_t a = r.number(toks[1]);
  const std::uint64_t d = r.number(toks[2]);
  const std::uint64_t k = r.number(toks[3]);
  GroupInput g;
  try {
    g.group_case.family = parse_family(toks[4]);
  } catch (const Error&) {
    r.fail("unknown case " + toks[4]);
  }
  if (d < 1 || d > 100000) r.fail("bad dimension");
  if (a < 1 || a > 64) r.fail("bad field degree");
  try {
    g.group_case.field = Field::make(p, static_cast<unsigned>(a));
  } catch (const Error& e) {
    r.fail(e.what());
  }
  const FieldPtr& field = g.group_case.field;
  g.group_case.d = static_cast<unsigned>(d);

  if (a > 1) {
    toks = r.next("modulus");
    if (toks.size() != a + 1) r.fail("expected " + std::to_string(a + 1) + " modulus coefficients");
    std::vector<Elem> mod;
    for (const auto& t : toks) mod.push_back(static_cast<Elem>(r.number(t)));
    if (mod != field->modulus()) r.fail("modulus is not the canonical one for GF(" + std::to_string(field->order()) + ")");
  }

  if (g.group_case.family != Family::kLinear) {
    toks = r.next("form");
    if (toks.size() != 2 || toks[0] != "form") r.fail("expected 'form <kind>'");
    try {
      g.form.kind = parse_form_kind(toks[1]);
    } catch (const Error&) {
      r.fail("unknown form kind " + toks[1]);
    }
    g.form.automorphism_order = g.form.kind == FormKind::kSesquilinear ? 2 : 1;
    g.form.gram = r.matrix(field, d);
  }

  for (std::uint64_t i = 0; i < k; ++i) {
    toks = r.next("mat");
    if (toks.size() != 1 || toks[0] != "mat") r.fail("expected 'mat'");
    g.generators.push_back(r.matrix(field, d));
  }
  if (!r.at_end()) {
    r.next("");
    r.fail("trailing content");
  }
  validate_group_input(g);
  return g;
}

}  // namespace ppd
