/* Copyright 2026 The compdet Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// compdet: command-line front end for composition matrices and their
// determinants.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "compdet/blocktri.h"
#include "compdet/closedform.h"
#include "compdet/comb.h"
#include "compdet/det.h"
#include "compdet/errors.h"
#include "compdet/factored.h"
#include "compdet/pcmatrix.h"
#include "compdet/poly_io.h"
#include "compdet/verify.h"
#include "json.hpp"

namespace {

using namespace compdet;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitIo = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Engine { kCofactor, kBareiss, kBlocktri, kFormula };
enum class Vars { kGeneral, kUnivariate, kZero };

const std::map<std::string, Engine> kEngines = {
    {"cofactor", Engine::kCofactor},
    {"bareiss", Engine::kBareiss},
    {"blocktri", Engine::kBlocktri},
    {"formula", Engine::kFormula},
};

const std::map<std::string, Vars> kVars = {
    {"general", Vars::kGeneral},
    {"univariate", Vars::kUnivariate},
    {"zero", Vars::kZero},
};

void check_np(int n, int p, bool proper) {
  if (n < 0) throw UsageError("n must be >= 0");
  if (p < 1) throw UsageError("p must be >= 1");
  if (proper && n < 1) throw UsageError("--proper needs n >= 1");
}

void write_text(const std::optional<std::string>& path,
                const std::string& text) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw IoError("cannot open " + *path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + *path + " failed");
}

// ------------------------------------------------------------- compositions

struct CompositionsArgs {
  int n = 0;
  int p = 1;
  bool proper = false;
  std::string format = "text";
};

int cmd_compositions(const CompositionsArgs& a) {
  check_np(a.n, a.p, a.proper);
  const CompositionList list =
      a.proper ? enumerate_proper(a.n, a.p) : enumerate_weak(a.n, a.p);
  if (a.format == "json") {
    json out = json::array();
    for (const Composition& c : list) out.push_back(c.parts());
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const Composition& c : list) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      std::cout << (k ? " " : "") << c[k];
    }
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ matrix

struct MatrixArgs {
  int n = 0;
  int p = 1;
  bool proper = false;
  std::string vars = "general";
};

// Replaces every variable by the single variable x.
MultiPoly identify_vars(const MultiPoly& f) {
  const std::vector<MultiPoly> images(static_cast<std::size_t>(f.nvars()),
                                      MultiPoly::variable(1, 0));
  return substitute(f, images, 1);
}

FactoredForm identify_vars(const FactoredForm& f) {
  const std::vector<MultiPoly> images(static_cast<std::size_t>(f.nvars()),
                                      MultiPoly::variable(1, 0));
  return substitute(f, images, 1);
}

PolyMatrix symbolic_matrix(int n, int p, bool proper, bool univariate) {
  if (!proper) return univariate ? build_univariate(n, p) : build_general(n, p);
  PolyMatrix m = build_proper(n, p);
  if (!univariate) return m;
  PolyMatrix out(m.dim(), 1);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = identify_vars(m(i, j));
  }
  out.set_labels(m.labels());
  return out;
}

IntMatrix integer_matrix(int n, int p, bool proper,
                         std::span<const BigInt> point, bool univariate) {
  if (point.empty() && !proper) return build_integer(n, p);
  if (point.empty()) {
    const std::vector<BigInt> zero(static_cast<std::size_t>(p), BigInt(0));
    return specialize(build_proper(n, p), zero);
  }
  return specialize(symbolic_matrix(n, p, proper, univariate), point);
}

int cmd_matrix(const MatrixArgs& a) {
  check_np(a.n, a.p, a.proper);
  const Vars vars = kVars.at(a.vars);
  const bool bare = vars == Vars::kUnivariate;
  json entries = json::array();
  std::shared_ptr<const CompositionList> labels;
  if (vars == Vars::kZero) {
    const IntMatrix m = integer_matrix(a.n, a.p, a.proper, {}, false);
    labels = m.labels();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).get_str());
      entries.push_back(std::move(row));
    }
  } else {
    const PolyMatrix m = symbolic_matrix(a.n, a.p, a.proper, bare);
    labels = m.labels();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) {
        row.push_back(format(m(i, j), {.bare_x = bare}));
      }
      entries.push_back(std::move(row));
    }
  }
  json label_list = json::array();
  if (labels) {
    for (const Composition& c : *labels) label_list.push_back(c.parts());
  }
  std::cout << json{{"labels", label_list}, {"entries", entries}}.dump()
            << "\n";
  return 0;
}

// --------------------------------------------------------------------- det

struct DetArgs {
  int n = 0;
  int p = 1;
  std::optional<std::string> engine;
  bool proper = false;
  std::string vars = "general";
  std::optional<std::string> at;
  std::string format = "text";
};

using DetValue = std::variant<MultiPoly, FactoredForm, BigInt>;

std::vector<BigInt> parse_point(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    BigInt v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw UsageError("--at expects comma-separated integers, got '" + text +
                       "'");
    }
    out.push_back(std::move(v));
  }
  if (out.empty()) throw UsageError("--at needs at least one value");
  return out;
}

FactoredForm formula_symbolic(int n, int p, bool proper, bool univariate) {
  if (proper) {
    const FactoredForm f = delta_star_x(n, p);
    return univariate ? identify_vars(f) : f;
  }
  if (univariate) {
    return n >= 1 ? delta_kx_univariate(n, p) : identify_vars(delta_bmx(n, p));
  }
  return delta_bmx(n, p);
}

BigInt formula_at_zero(int n, int p, bool proper) {
  if (proper) return to_integer(delta_star_int(n, p));
  if (n == 0) return 1;
  return to_integer(delta_bm(n, p));
}

DetValue compute_det(Engine engine, int n, int p, bool proper, Vars vars,
                     const std::optional<std::vector<BigInt>>& point) {
  const bool univariate = vars == Vars::kUnivariate;
  switch (engine) {
    case Engine::kCofactor:
    case Engine::kBareiss: {
      const bool bareiss = engine == Engine::kBareiss;
      if (point || vars == Vars::kZero) {
        const std::span<const BigInt> at =
            point ? std::span<const BigInt>(*point) : std::span<const BigInt>();
        const IntMatrix m = integer_matrix(n, p, proper, at, univariate);
        return bareiss ? det_bareiss(m) : det_cofactor(m);
      }
      const PolyMatrix m = symbolic_matrix(n, p, proper, univariate);
      return bareiss ? det_bareiss(m) : det_cofactor(m);
    }
    case Engine::kBlocktri: {
      if (proper) throw UsageError("the blocktri engine has no --proper mode");
      FactoredForm f = det_recursive_factored(n, p);
      if (univariate) f = identify_vars(f);
      if (point) return evaluate(f, *point);
      if (vars == Vars::kZero) {
        const std::vector<BigInt> zero(static_cast<std::size_t>(p), BigInt(0));
        return evaluate(f, zero);
      }
      return f;
    }
    case Engine::kFormula: {
      if (vars == Vars::kZero && !point) return formula_at_zero(n, p, proper);
      const FactoredForm f = formula_symbolic(n, p, proper, univariate);
      if (point) return evaluate(f, *point);
      return f;
    }
  }
  throw std::logic_error("unhandled engine");
}

int cmd_det(const DetArgs& a) {
  check_np(a.n, a.p, a.proper);
  const Vars vars = kVars.at(a.vars);
  std::optional<std::vector<BigInt>> point;
  if (a.at) {
    if (vars == Vars::kZero) throw UsageError("--at conflicts with --vars zero");
    point = parse_point(*a.at);
    const std::size_t want =
        vars == Vars::kUnivariate ? 1 : static_cast<std::size_t>(a.p);
    if (point->size() != want) {
      throw UsageError("--at needs " + std::to_string(want) + " value(s)");
    }
  }
  const bool numeric = point || vars == Vars::kZero;
  const Engine engine = a.engine ? kEngines.at(*a.engine)
                                 : (numeric ? Engine::kBareiss
                                            : Engine::kFormula);
  const DetValue value = compute_det(engine, a.n, a.p, a.proper, vars, point);
  const FormatOptions options{.compact = true,
                              .bare_x = vars == Vars::kUnivariate};
  const bool as_json = a.format == "json";
  std::string text;
  if (const auto* f = std::get_if<MultiPoly>(&value)) {
    text = as_json ? to_json(*f).dump() : format(*f, {.bare_x = options.bare_x});
  } else if (const auto* f = std::get_if<FactoredForm>(&value)) {
    text = as_json ? to_json(*f).dump() : format(*f, options);
  } else {
    const BigInt& v = std::get<BigInt>(value);
    text = as_json ? to_json(MultiPoly(0, v)).dump() : v.get_str();
  }
  std::cout << text << "\n";
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  int nmax = 0;
  int pmax = 1;
  bool proper = false;
  int points = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.nmax < 0) throw UsageError("--nmax must be >= 0");
  if (a.pmax < 1) throw UsageError("--pmax must be >= 1");
  if (a.points < 0) throw UsageError("--points must be >= 0");
  const VerifyReport report =
      run_verify({a.nmax, a.pmax, a.proper, a.points, a.seed});
  if (a.out) write_text(a.out, to_json(report, a.timings).dump(2) + "\n");
  (a.out && *a.out == "-" ? std::cerr : std::cout)
      << summary_line(report) << "\n";
  return report.ok() ? 0 : kExitFail;
}

// -------------------------------------------------------------- identities

int cmd_identities(const std::vector<std::string>& names) {
  std::vector<Suite> suites;
  for (const std::string& name : names) {
    if (name == "all") {
      suites = all_suites();
      break;
    }
    const std::optional<Suite> s = parse_suite(name);
    if (!s) throw UsageError("unknown suite '" + name + "'");
    suites.push_back(*s);
  }
  const VerifyReport report = identity_suite(suites);
  for (const VerifyCell& c : report.cells) {
    if (c.pass) continue;
    std::cout << "FAIL " << c.check << " (" << c.n << "," << c.p
              << "): " << c.witness.value_or("") << "\n";
  }
  std::cout << summary_line(report) << "\n";
  return report.ok() ? 0 : kExitFail;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  int nmax = 1;
  int pmax = 1;
  std::string engines = "bareiss,formula";
  std::optional<std::string> out;
};

std::size_t peak_of(const FactoredForm& f) {
  std::size_t peak = 1;
  for (const Factor& factor : f.factors()) {
    peak = std::max(peak, factor.base.size());
  }
  return peak;
}

int cmd_bench(const BenchArgs& a) {
  if (a.nmax < 1) throw UsageError("--nmax must be >= 1");
  if (a.pmax < 1) throw UsageError("--pmax must be >= 1");
  std::vector<std::pair<std::string, Engine>> engines;
  std::stringstream in(a.engines);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const auto it = kEngines.find(name);
    if (it == kEngines.end()) throw UsageError("unknown engine '" + name + "'");
    engines.emplace_back(name, it->second);
  }
  if (engines.empty()) throw UsageError("--engines must name at least one engine");

  std::ostringstream csv;
  csv << "n,p,dim,engine,milliseconds,peak-term-count\n";
  for (int n = 1; n <= a.nmax; ++n) {
    for (int p = 1; p <= a.pmax; ++p) {
      const MultiPoly expected = expand_factored(delta_bmx(n, p));
      const std::size_t dim = to_ulong_checked(binomial(n + p - 1, p - 1));
      for (const auto& [label, engine] : engines) {
        const auto start = std::chrono::steady_clock::now();
        std::size_t peak = 0;
        MultiPoly value;
        switch (engine) {
          case Engine::kCofactor:
            value = det_cofactor(build_general(n, p));
            peak = value.size();
            break;
          case Engine::kBareiss: {
            BareissStats stats;
            value = det_bareiss(build_general(n, p), &stats);
            peak = stats.peak_terms;
            break;
          }
          case Engine::kBlocktri:
          case Engine::kFormula: {
            const FactoredForm f = engine == Engine::kBlocktri
                                       ? det_recursive_factored(n, p)
                                       : delta_bmx(n, p);
            peak = peak_of(f);
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            if (!(f == delta_bmx(n, p))) {
              throw InvariantViolation(label + " disagrees with the closed form at (" +
                                       std::to_string(n) + "," +
                                       std::to_string(p) + ")");
            }
            csv << n << "," << p << "," << dim << "," << label << ","
                << ms << "," << peak << "\n";
            continue;
          }
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        if (!(value == expected)) {
          throw InvariantViolation(label + " disagrees with the closed form at (" +
                                   std::to_string(n) + "," +
                                   std::to_string(p) + ")");
        }
        csv << n << "," << p << "," << dim << "," << label << "," << ms << ","
            << peak << "\n";
      }
    }
  }
  write_text(a.out, csv.str());
  return 0;
}

void apply_thread_cap() {
  const char* env = std::getenv("COMPDET_THREADS");
  if (!env) return;
  char* end = nullptr;
  const long threads = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || threads < 1) {
    throw UsageError("COMPDET_THREADS must be a positive integer");
  }
  omp_set_num_threads(static_cast<int>(threads));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition matrices: enumeration, determinants, verification"};
  app.require_subcommand(1);

  CompositionsArgs comp;
  auto* c = app.add_subcommand("compositions", "List compositions in order");
  c->add_option("n", comp.n, "Total")->required();
  c->add_option("p", comp.p, "Number of parts")->required();
  c->add_flag("--proper", comp.proper, "Only parts >= 1");
  c->add_option("--format", comp.format)->check(CLI::IsMember({"text", "json"}));

  MatrixArgs mat;
  auto* m = app.add_subcommand("matrix", "Dump the matrix as JSON");
  m->add_option("n", mat.n)->required();
  m->add_option("p", mat.p)->required();
  m->add_flag("--proper", mat.proper);
  m->add_option("--vars", mat.vars)
      ->check(CLI::IsMember({"general", "univariate", "zero"}));

  DetArgs det;
  auto* d = app.add_subcommand("det", "Determinant by a chosen engine");
  d->add_option("n", det.n)->required();
  d->add_option("p", det.p)->required();
  d->add_option("--engine", det.engine)
      ->check(CLI::IsMember({"cofactor", "bareiss", "blocktri", "formula"}));
  d->add_flag("--proper", det.proper);
  d->add_option("--vars", det.vars)
      ->check(CLI::IsMember({"general", "univariate", "zero"}));
  d->add_option("--at", det.at, "Evaluate at v1,...,vp");
  d->add_option("--format", det.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Cross-check engines against the closed forms");
  v->add_option("--nmax", ver.nmax)->required();
  v->add_option("--pmax", ver.pmax)->required();
  v->add_flag("--proper", ver.proper);
  v->add_option("--points", ver.points, "Random points per (n, p)");
  v->add_option("--seed", ver.seed);
  v->add_option("--out", ver.out, "Report file ('-' for stdout)");
  v->add_flag("--timings", ver.timings, "Record per-cell milliseconds");

  std::vector<std::string> suites{"all"};
  auto* i = app.add_subcommand("identities", "Run the fixed identity suites");
  i->add_option("--suite", suites, "ci, xy, rec, equiv, colreduce or all");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time engines and write a CSV table");
  b->add_option("--nmax", bench.nmax)->required();
  b->add_option("--pmax", bench.pmax)->required();
  b->add_option("--engines", bench.engines, "Comma-separated engine list");
  b->add_option("--out", bench.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    apply_thread_cap();
    if (*c) return cmd_compositions(comp);
    if (*m) return cmd_matrix(mat);
    if (*d) return cmd_det(det);
    if (*v) return cmd_verify(ver);
    if (*i) return cmd_identities(suites);
    if (*b) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GuardViolation& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
