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

#include "ppd/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "ppd/module_structure.hpp"

namespace ppd {

namespace {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned a = 0;
};

PrimePower split_prime_power(std::uint64_t q) {
  const auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) throw Error(ErrorCode::kNotPrime, "q is not a prime power");
  PrimePower pp{primes[0], 0};
  for (std::uint64_t r = q; r > 1; r /= pp.p) ++pp.a;
  return pp;
}

bool contains(const std::vector<unsigned>& v, unsigned e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

// Least n >= 1 with fail(n) <= target, for fail decreasing in n.
unsigned least_budget(double target, const std::function<double(unsigned)>& fail) {
  unsigned hi = 1;
  while (fail(hi) >= target) {
    if (hi > (1u << 30)) throw Error(ErrorCode::kUnsupportedDimension, "budget does not converge");
    hi *= 2;
  }
  unsigned lo = hi / 2 + 1;
  if (hi == 1) return 1;
  while (lo < hi) {
    const unsigned mid = lo + (hi - lo) / 2;
    if (fail(mid) < target) hi = mid; else lo = mid + 1;
  }
  return lo;
}

// Smallest N with (1 - c)^N < target.
unsigned geometric_budget(double target, double c) {
  if (c >= 1) return 1;
  const double n = std::log(target) / std::log1p(-c);
  return static_cast<unsigned>(std::max(1.0, std::ceil(n)));
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

ProportionBounds proportion_bounds(Family family, unsigned d, std::uint64_t q, unsigned e,
                                   Level level) {
  const auto allowed = allowed_e(family, d, q);
  if (!contains(allowed, e)) {
    throw Error(ErrorCode::kNotAllowed, "e=" + std::to_string(e) + " is not admissible for " +
                                            family_name(family) + " d=" + std::to_string(d) +
                                            " q=" + std::to_string(q));
  }
  ProportionBounds b;
  b.e = e;
  b.doubled = family == Family::kOrthogonalMinus && e == d &&
              (level == Level::kOmega || level == Level::kSpecial);
  const unsigned k = b.doubled ? 2 : 1;
  b.lower = mpq_class(k, e + 1);
  b.upper = mpq_class(k, e);
  b.lower.canonicalize();
  b.upper.canonicalize();
  return b;
}

unsigned RecognitionPlan::total_budget() const {
  unsigned t = n1 + n3;
  for (const auto& [b, n] : n2) t += n;
  return t;
}

bool eliminates(unsigned e, std::uint64_t b, unsigned d, std::uint64_t q) {
  if (e % b == 0) return false;
  if (b != d) return true;
  // b = d prime: e = d - 1 does not count when d is itself a primitive prime
  // divisor of q^{d-1} - 1, i.e. q has order d - 1 modulo d.
  if (e != d - 1 || q % d == 0) return true;
  std::uint64_t x = 1;
  unsigned order = 0;
  do {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * (q % d)) % d);
    ++order;
  } while (x != 1);
  return order != d - 1;
}

namespace {

long double stage1_bound(const RecognitionPlan& pl, unsigned n) {
  // One draw is a categorical variable: witness of degree e with probability
  // at least lower(e). Large and basic witnesses are only counted for e where
  // they exist, and fewer than two distinct degrees is bounded by the
  // independent model with exactly these masses.
  const long double nn = n;
  long double total = 0;
  for (const auto& [e, p] : pl.lower) total += p;
  const long double none = 1 - total;
  long double distinct = 0;
  for (const auto& [e, p] : pl.lower) distinct += std::pow(none + p, nn);
  distinct -= static_cast<long double>(pl.lower.size() - 1) * std::pow(none, nn);
  distinct = std::max<long double>(distinct, 0);
  return std::pow(1 - static_cast<long double>(pl.mass_large), nn) +
         std::pow(1 - static_cast<long double>(pl.mass_basic), nn) + distinct;
}

}  // namespace

double stage1_failure_bound(const RecognitionPlan& plan, unsigned n) {
  return static_cast<double>(stage1_bound(plan, n));
}

RecognitionPlan plan(Family family, unsigned d, std::uint64_t q, double epsilon,
                     const ArithmeticLimits& limits) {
  if (!(epsilon > 0 && epsilon < 1)) throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0,1)");
  const PrimePower pp = split_prime_power(q);
  RecognitionPlan pl;
  pl.epsilon = epsilon;
  pl.family = family;
  pl.d = d;
  pl.q = q;
  pl.allowed = allowed_e(family, d, q);
  if (pl.allowed.size() < 3) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "fewer than three admissible e (" + join(pl.allowed) + ")");
  }

  // The cascade is cheap, so existence of large and basic divisors is
  // decided for every admissible e regardless of the classification cap.
  ArithmeticLimits wide = limits;
  wide.max_bits = std::max<unsigned>(wide.max_bits,
                                     static_cast<unsigned>(d * std::ceil(std::log2(double(q))) + 2));
  double total = 0;
  for (unsigned e : pl.allowed) {
    const double p = proportion_bounds(family, d, q, e, Level::kOmega).lower.get_d();
    pl.lower[e] = p;
    total += p;
    const PhiTriple t = phi_triple(e, q, pp.p, pp.a, wide);
    if (t.phi_large > 1) pl.mass_large += p;
    if (t.phi_basic > 1) pl.mass_basic += p;
  }
  if (pl.mass_large == 0) throw Error(ErrorCode::kUnsupportedDimension, "no admissible e has a large ppd");
  if (pl.mass_basic == 0) throw Error(ErrorCode::kUnsupportedDimension, "no admissible e has a basic ppd");

  const double third = epsilon / 3;
  pl.n1 = least_budget(third, [&](unsigned n) { return stage1_failure_bound(pl, n); });

  const auto primes = prime_divisors(d);
  const double mu = static_cast<double>(primes.size());
  for (std::uint64_t b : primes) {
    double c = 0;
    for (unsigned e : pl.allowed) {
      if (eliminates(e, b, d, q)) c += pl.lower[e];
    }
    if (c > 0) {
      pl.n2[b] = geometric_budget(third / mu, c);
    } else if (b == 2 && family != Family::kLinear && family != Family::kUnitary) {
      pl.centralizer_primes.push_back(b);
      pl.n2[b] = 2 * pl.commutators;
    } else {
      throw Error(ErrorCode::kUnsupportedDimension,
                  "no admissible e eliminates b=" + std::to_string(b));
    }
  }

  std::vector<double> ps;
  for (const auto& [e, p] : pl.lower) ps.push_back(p);
  std::sort(ps.rbegin(), ps.rend());
  const double c3 = total - ps[0] - ps[1];
  pl.n3 = geometric_budget(third, c3);
  return pl;
}

Recognition::Recognition(RecognitionPlan plan, SampleSource source)
    : plan_(std::move(plan)), source_(std::move(source)) {}

Sample Recognition::draw() {
  Sample s = source_();
  ++draws_;
  std::ostringstream line;
  line << "draw " << draws_ << " e=";
  if (s.witness) {
    line << s.witness->e << " large=" << bool_str(s.witness->is_large)
         << " basic=" << bool_str(s.witness->is_basic);
    // Witnesses with e outside the admissible set say nothing about the
    // group being recognised and are kept out of the pool.
    if (contains(plan_.allowed, s.witness->e)) pool_.push_back(*s.witness);
  } else {
    line << "none large=false basic=false";
  }
  transcript_.push_back(line.str());
  return s;
}

bool Recognition::stage1_done() const {
  std::set<unsigned> es;
  bool large = false, basic = false;
  for (const auto& w : pool_) {
    es.insert(w.e);
    large = large || w.is_large;
    basic = basic || w.is_basic;
  }
  return es.size() >= 2 && large && basic;
}

bool Recognition::stage1() {
  for (unsigned i = 0; i < plan_.n1 && !stage1_done(); ++i) draw();
  std::set<unsigned> es, large, basic;
  for (const auto& w : pool_) {
    es.insert(w.e);
    if (w.is_large) large.insert(w.e);
    if (w.is_basic) basic.insert(w.e);
  }
  auto fmt = [](const std::set<unsigned>& s) {
    return s.empty() ? std::string("-") : join(std::vector<unsigned>(s.begin(), s.end()));
  };
  const bool ok = stage1_done();
  transcript_.push_back(std::string("stage1 ") + (ok ? "pass" : "fail") + " e=" + fmt(es) +
                        " large=" + fmt(large) + " basic=" + fmt(basic));
  return ok;
}

std::vector<std::uint64_t> Recognition::remaining_primes() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b : prime_divisors(plan_.d)) {
    if (std::find(plan_.centralizer_primes.begin(), plan_.centralizer_primes.end(), b) !=
        plan_.centralizer_primes.end()) {
      continue;
    }
    bool done = false;
    for (const auto& w : pool_) done = done || eliminates(w.e, b, plan_.d, plan_.q);
    if (!done) out.push_back(b);
  }
  return out;
}

bool Recognition::stage2() {
  std::vector<std::string> detail;
  for (std::uint64_t b : plan_.centralizer_primes) {
    // Extension-field subgroups of degree 2 have abelian image in the Galois
    // group, so their commutators commute with a copy of GF(q^2). A
    // one-dimensional centralizer of sampled commutators rules them out.
    bool by_witness = false;
    for (const auto& w : pool_) by_witness = by_witness || eliminates(w.e, b, plan_.d, plan_.q);
    if (by_witness) continue;
    std::vector<Matrix> comms;
    for (unsigned k = 0; k < plan_.commutators; ++k) {
      Sample x = draw();
      Sample y = draw();
      if (!x.element || !y.element) break;
      comms.push_back(mat_commutator(*x.element, *y.element));
    }
    const std::size_t dim = comms.size() == plan_.commutators ? centralizer_dim(comms) : 0;
    if (dim != 1) {
      transcript_.push_back("stage2 fail b=" + std::to_string(b) + " centralizer=" +
                            std::to_string(dim));
      return false;
    }
    detail.push_back("b=" + std::to_string(b) + ":centralizer=1");
  }

  unsigned budget = 0;
  for (std::uint64_t b : remaining_primes()) budget = std::max(budget, plan_.n2.at(b));
  for (unsigned i = 0; i < budget && !remaining_primes().empty(); ++i) draw();

  const auto left = remaining_primes();
  if (!left.empty()) {
    std::string s = "stage2 fail";
    for (std::uint64_t b : left) s += " b=" + std::to_string(b);
    transcript_.push_back(s + " not eliminated");
    return false;
  }
  for (std::uint64_t b : prime_divisors(plan_.d)) {
    for (const auto& w : pool_) {
      if (eliminates(w.e, b, plan_.d, plan_.q)) {
        detail.push_back("b=" + std::to_string(b) + ":e=" + std::to_string(w.e));
        break;
      }
    }
  }
  std::string s = "stage2 pass";
  if (detail.empty()) s += " -";
  for (const auto& x : detail) s += " " + x;
  transcript_.push_back(s);
  return true;
}

bool Recognition::stage3() {
  auto distinct = [&] {
    std::set<unsigned> es;
    for (const auto& w : pool_) es.insert(w.e);
    return es;
  };
  for (unsigned i = 0; i < plan_.n3 && distinct().size() < 3; ++i) draw();
  const auto es = distinct();
  const bool ok = es.size() >= 3;
  transcript_.push_back(std::string("stage3 ") + (ok ? "pass" : "fail") + " e=" +
                        (es.empty() ? std::string("-") : join(std::vector<unsigned>(es.begin(), es.end()))));
  return ok;
}

const char* outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::kContainsOmega: return "CONTAINS_OMEGA";
    case Outcome::kLikelyNotOmega: return "LIKELY_NOT_OMEGA";
    case Outcome::kPreconditionFailed: return "PRECONDITION_FAILED";
    case Outcome::kUnsupported: return "UNSUPPORTED";
  }
  return "?";
}

std::string format_epsilon(double epsilon) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", epsilon);
  return buf;
}

RecognitionVerdict recognize(const GroupInput& g, double epsilon, std::uint64_t seed,
                             const RecognizeOptions& options) {
  if (!(epsilon > 0 && epsilon < 1)) throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0,1)");
  RecognitionVerdict v;
  const GroupCase& c = g.group_case;
  auto finish = [&](Outcome o, std::string reason) {
    v.outcome = o;
    v.reason = std::move(reason);
    v.transcript.push_back(std::string("verdict ") + outcome_name(o) + " epsilon=" +
                           format_epsilon(epsilon) + " seed=" + std::to_string(seed));
    return v;
  };
  const std::uint64_t q = c.field ? c.field->order() : 0;
  v.transcript.push_back(std::string("input case=") + family_name(c.family) +
                         " d=" + std::to_string(c.d) + " q=" + std::to_string(q) +
                         " generators=" + std::to_string(g.generators.size()));

  try {
    validate_group_input(g);
  } catch (const Error& e) {
    v.transcript.push_back(std::string("precondition forms ") + e.what());
    return finish(Outcome::kPreconditionFailed, "FORM_INVALID");
  }
  v.transcript.push_back("precondition forms ok");

  const auto irr = is_irreducible(g.generators, options.irreducibility_attempts, derive_seed(seed, 1));
  v.transcript.push_back(std::string("precondition irreducible ") + irreducibility_name(irr.status) +
                         " attempts=" + std::to_string(irr.attempts));
  if (irr.status == Irreducibility::kReducible) return finish(Outcome::kPreconditionFailed, "NOT_IRREDUCIBLE");
  if (irr.status == Irreducibility::kInconclusive) {
    return finish(Outcome::kPreconditionFailed, "IRREDUCIBILITY_INCONCLUSIVE");
  }

  const double bits = c.d * std::log2(static_cast<double>(q));
  if (bits > options.limits.max_bits) {
    v.transcript.push_back("plan unsupported q^d exceeds 2^" + std::to_string(options.limits.max_bits));
    return finish(Outcome::kUnsupported, "UNSUPPORTED_DIMENSION");
  }
  RecognitionPlan pl;
  try {
    pl = plan(c.family, c.d, q, epsilon, options.limits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupportedDimension) throw;
    v.transcript.push_back(std::string("plan unsupported ") + e.what());
    return finish(Outcome::kUnsupported, "UNSUPPORTED_DIMENSION");
  }
  {
    std::string n2;
    for (const auto& [b, n] : pl.n2) {
      if (!n2.empty()) n2 += ',';
      n2 += std::to_string(b) + ":" + std::to_string(n);
    }
    v.transcript.push_back("plan allowed=" + join(pl.allowed) + " N1=" + std::to_string(pl.n1) +
                           " N2=" + (n2.empty() ? "-" : n2) + " N3=" + std::to_string(pl.n3));
  }

  Sampler sampler(g.generators, seed, options.sampler);
  v.transcript.push_back(std::string("sampler rng=") + Rng::kAlgorithm + " seed=" +
                         std::to_string(seed) + " slots=" + std::to_string(sampler.slot_count()) +
                         " burn_in=" + std::to_string(options.sampler.burn_in));
  const ArithmeticLimits limits = options.limits;
  Recognition rec(pl, [&sampler, limits] {
    Sample s;
    s.element = sampler.next();
    s.witness = classify_element(*s.element, limits);
    return s;
  });

  bool ok = rec.stage1();
  unsigned failed = ok ? 0 : 1;
  if (ok) {
    ok = rec.stage2();
    if (!ok) failed = 2;
  }
  if (ok) {
    ok = rec.stage3();
    if (!ok) failed = 3;
  }
  v.transcript.insert(v.transcript.end(), rec.transcript().begin(), rec.transcript().end());
  v.witnesses = rec.witnesses();
  v.draws = rec.draws();
  v.failed_stage = failed;
  if (ok) return finish(Outcome::kContainsOmega, "ALL_STAGES_PASSED");
  return finish(Outcome::kLikelyNotOmega, "STAGE" + std::to_string(failed) + "_FAILED");
}

}  // namespace ppd
