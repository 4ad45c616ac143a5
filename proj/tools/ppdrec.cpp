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

// ppdrec: command-line front end. Exit status 0 on success or
// CONTAINS_OMEGA, 1 on LIKELY_NOT_OMEGA, 2 on precondition or validation
// failure, 3 on usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ppd/classify.hpp"
#include "ppd/group_file.hpp"
#include "ppd/oracle.hpp"
#include "ppd/recognition.hpp"
#include "ppd/sampler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotOmega = 1;
constexpr int kExitFailure = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldArgs {
  std::uint64_t q = 0, p = 0;
  unsigned a = 0;
};

struct GroupArgs {
  FieldArgs field;
  unsigned d = 0;
  std::string family = "linear";
  std::string level = "omega";
  std::string group;
};

void add_field(CLI::App* app, FieldArgs* f) {
  app->add_option("--q", f->q, "field order");
  app->add_option("--p", f->p, "characteristic");
  app->add_option("--a", f->a, "field degree over GF(p)");
}

void add_group(CLI::App* app, GroupArgs* g) {
  add_field(app, &g->field);
  app->add_option("--d", g->d, "dimension");
  app->add_option("--case", g->family, "sl, sp, su, o+, o- or o");
  app->add_option("--level", g->level, "omega, so, full or similitude");
  app->add_option("--group", g->group, "group file");
}

ppd::FieldPtr make_field(const FieldArgs& f) {
  if (f.q != 0) {
    auto field = ppd::Field::make_of_order(f.q);
    if ((f.p && f.p != field->characteristic()) || (f.a && f.a != field->degree())) {
      throw UsageError("--q disagrees with --p/--a");
    }
    return field;
  }
  if (f.p == 0) throw UsageError("give --q or --p (and --a)");
  return ppd::Field::make(f.p, f.a ? f.a : 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ppd::GroupInput load_group(const GroupArgs& g) {
  if (!g.group.empty()) return ppd::parse_group_file(read_file(g.group));
  if (g.d == 0) throw UsageError("give --group or --d with a field");
  ppd::GroupCase c{ppd::parse_family(g.family), g.d, make_field(g.field)};
  return ppd::standard_group(c, ppd::parse_level(g.level));
}

ppd::Matrix parse_matrix(const ppd::FieldPtr& field, unsigned d, const std::string& text) {
  std::vector<std::vector<ppd::Elem>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::istringstream in(row);
    std::vector<ppd::Elem> r;
    long long x;
    while (in >> x) {
      if (x < 0 || static_cast<std::uint64_t>(x) >= field->order()) throw UsageError("entry out of range");
      r.push_back(static_cast<ppd::Elem>(x));
    }
    if (!in.eof()) throw UsageError("bad matrix entry");
    rows.push_back(std::move(r));
  }
  if (d == 0) d = static_cast<unsigned>(rows.size());
  if (rows.size() != d) throw UsageError("matrix must have d rows");
  ppd::Matrix m(field, d, d);
  for (unsigned i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw UsageError("matrix must be square");
    for (unsigned j = 0; j < d; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

int cmd_gen(const GroupArgs& g) {
  std::cout << ppd::write_group_file(load_group(g));
  return kExitOk;
}

int cmd_classify(const FieldArgs& f, unsigned d, const std::string& matrix) {
  const auto field = make_field(f);
  std::cout << ppd::format_witness(ppd::classify_element(parse_matrix(field, d, matrix))) << '\n';
  return kExitOk;
}

int cmd_tables(const FieldArgs& f, unsigned emax, unsigned max_bits) {
  const auto field = make_field(f);
  const std::uint64_t q = field->order();
  ppd::ArithmeticLimits limits;
  limits.max_bits = max_bits;
  std::cout << "e q phi phi_large phi_basic ppds\n";
  for (unsigned e = 1; e <= emax; ++e) {
    const auto t = ppd::phi_triple(e, q, field->characteristic(), field->degree(), limits);
    std::string ppds;
    try {
      ppds = ppd::format_factorization(ppd::ppd_list(q, e, limits).primes);
    } catch (const ppd::Error& err) {
      if (err.code() != ppd::ErrorCode::kOverflow) throw;
      ppds = "?";
    }
    std::cout << e << ' ' << q << ' ' << ppd::to_decimal(t.phi) << ' ' << ppd::to_decimal(t.phi_large)
              << ' ' << ppd::to_decimal(t.phi_basic) << ' ' << ppds << '\n';
  }
  return kExitOk;
}

struct Tally {
  std::map<unsigned, std::uint64_t> ppd, large, basic;
};

int cmd_estimate(const GroupArgs& g, std::uint64_t samples, std::uint64_t seed, unsigned jobs) {
  const auto input = load_group(g);
  const unsigned d = input.group_case.d;
  if (jobs == 0) jobs = 1;
  std::vector<Tally> tallies(jobs);
  std::vector<std::string> errors(jobs);
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t n = samples / jobs + (j < samples % jobs ? 1 : 0);
    threads.emplace_back([&, j, n] {
      try {
        ppd::Sampler s(input.generators, jobs == 1 ? seed : ppd::derive_seed(seed, j));
        for (std::uint64_t i = 0; i < n; ++i) {
          const auto w = ppd::classify_element(s.next());
          if (!w) continue;
          ++tallies[j].ppd[w->e];
          if (w->is_large) ++tallies[j].large[w->e];
          if (w->is_basic) ++tallies[j].basic[w->e];
        }
      } catch (const std::exception& e) {
        errors[j] = e.what();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(e);
  }
  Tally total;
  for (const auto& t : tallies) {
    for (const auto& [e, c] : t.ppd) total.ppd[e] += c;
    for (const auto& [e, c] : t.large) total.large[e] += c;
    for (const auto& [e, c] : t.basic) total.basic[e] += c;
  }
  std::cout << "samples " << samples << " seed " << seed << " jobs " << jobs << '\n';
  for (unsigned e = d / 2 + 1; e <= d; ++e) {
    const std::uint64_t c = total.ppd[e];
    char freq[32];
    std::snprintf(freq, sizeof freq, "%.6f", samples ? static_cast<double>(c) / samples : 0.0);
    std::cout << "e=" << e << " ppd=" << c << " large=" << total.large[e] << " basic=" << total.basic[e]
              << " freq=" << freq << '\n';
  }
  return kExitOk;
}

int cmd_recognize(const GroupArgs& g, double epsilon, std::uint64_t seed) {
  ppd::GroupInput input;
  try {
    input = load_group(g);
  } catch (const ppd::Error& e) {
    std::cout << "precondition input " << e.what() << '\n';
    std::cout << "verdict PRECONDITION_FAILED epsilon=" << ppd::format_epsilon(epsilon)
              << " seed=" << seed << '\n';
    return kExitFailure;
  }
  const auto v = ppd::recognize(input, epsilon, seed);
  for (const auto& line : v.transcript) std::cout << line << '\n';
  switch (v.outcome) {
    case ppd::Outcome::kContainsOmega: return kExitOk;
    case ppd::Outcome::kLikelyNotOmega: return kExitNotOmega;
    default: return kExitFailure;
  }
}

int cmd_oracle(const GroupArgs& g, std::size_t cap) {
  const auto input = load_group(g);
  const auto group = ppd::enumerate(input.generators, cap);
  const unsigned d = input.group_case.d;
  std::cout << "order " << group.order() << '\n';
  for (unsigned e = d / 2 + 1; e <= d; ++e) {
    std::cout << "e=" << e << " proportion=" << ppd::exact_ppd_proportion(group, e).get_str() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ppd-element classification and classical group recognition"};
  app.require_subcommand(1);

  GroupArgs gen_args;
  auto* gen = app.add_subcommand("gen", "write standard generators as a group file");
  add_group(gen, &gen_args);

  FieldArgs cls_field;
  unsigned cls_d = 0;
  std::string cls_matrix;
  auto* cls = app.add_subcommand("classify", "classify one matrix");
  add_field(cls, &cls_field);
  cls->add_option("--d", cls_d, "dimension");
  cls->add_option("--matrix", cls_matrix, "rows separated by ';'")->required();

  FieldArgs tab_field;
  unsigned tab_emax = 0, tab_bits = 512;
  auto* tab = app.add_subcommand("tables", "Phi, Phi_l, Phi_b for e = 1..emax");
  add_field(tab, &tab_field);
  tab->add_option("--emax", tab_emax, "largest e")->required();
  tab->add_option("--max-bits", tab_bits, "cap on log2(q^e)");

  GroupArgs est_args;
  std::uint64_t est_samples = 1000;
  std::optional<std::uint64_t> est_seed;
  unsigned est_jobs = 1;
  auto* est = app.add_subcommand("estimate", "sampled ppd proportions");
  add_group(est, &est_args);
  est->add_option("--samples", est_samples, "number of samples");
  est->add_option("--seed", est_seed, "random seed");
  est->add_option("--jobs", est_jobs, "parallel jobs with derived seeds");

  GroupArgs rec_args;
  double rec_epsilon = 0.1;
  std::optional<std::uint64_t> rec_seed;
  auto* rec = app.add_subcommand("recognize", "Monte Carlo recognition of a classical group");
  add_group(rec, &rec_args);
  rec->add_option("--epsilon", rec_epsilon, "error bound in (0,1)");
  rec->add_option("--seed", rec_seed, "random seed");

  GroupArgs ora_args;
  std::size_t ora_cap = ppd::kDefaultEnumerationCap;
  auto* ora = app.add_subcommand("oracle", "enumerate and print exact proportions");
  add_group(ora, &ora_args);
  ora->add_option("--cap", ora_cap, "enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args);
    if (*cls) return cmd_classify(cls_field, cls_d, cls_matrix);
    if (*tab) return cmd_tables(tab_field, tab_emax, tab_bits);
    if (*est) {
      if (!est_seed) throw UsageError("estimate needs --seed");
      return cmd_estimate(est_args, est_samples, *est_seed, est_jobs);
    }
    if (*rec) {
      if (!rec_seed) throw UsageError("recognize needs --seed");
      if (!(rec_epsilon > 0 && rec_epsilon < 1)) throw UsageError("--epsilon must lie in (0,1)");
      return cmd_recognize(rec_args, rec_epsilon, *rec_seed);
    }
    if (*ora) return cmd_oracle(ora_args, ora_cap);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
