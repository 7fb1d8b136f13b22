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

#include "compdet/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "compdet/blocktri.h"
#include "compdet/closedform.h"
#include "compdet/comb.h"
#include "compdet/det.h"
#include "compdet/dr.h"
#include "compdet/errors.h"
#include "compdet/factored.h"
#include "compdet/fr.h"
#include "compdet/pcmatrix.h"
#include "compdet/poly_io.h"
#include "compdet/rational.h"

namespace compdet {
namespace {

using Outcome = std::optional<std::string>;

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string clip(std::string_view text) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  std::string out(text.substr(0, kWitnessMaxChars));
  if (text.size() > kWitnessMaxChars) out += "...";
  out += " #fnv1a64=";
  out += hash;
  return out;
}

Outcome compare_polys(const MultiPoly& engine, const MultiPoly& formula,
                      std::string_view engine_name) {
  if (engine == formula) return std::nullopt;
  return make_witness(engine_name, format(engine), "formula", format(formula));
}

Outcome compare_factored(const FactoredForm& a, const FactoredForm& b,
                         std::string_view a_name, std::string_view b_name) {
  if (a == b) return std::nullopt;
  return make_witness(a_name, format(a, {.compact = true}), b_name,
                      format(b, {.compact = true}));
}

Outcome compare_ints(const BigInt& a, const BigInt& b,
                     std::string_view a_name, std::string_view b_name) {
  if (a == b) return std::nullopt;
  return make_witness(a_name, a.get_str(), b_name, b.get_str());
}

Outcome verdict(bool ok, std::string what) {
  if (ok) return std::nullopt;
  return what;
}

// Total degree of the expanded closed form.
unsigned long closed_form_degree(int n, int p, bool proper) {
  const FactoredForm f = proper ? delta_star_x(n, p) : delta_bmx(n, p);
  BigInt degree = 0;
  for (const Factor& factor : f.factors()) {
    if (!factor.base.is_constant()) degree += factor.exponent;
  }
  return to_ulong_checked(degree);
}

std::size_t matrix_dim(int n, int p, bool proper) {
  const BigInt d =
      proper ? (p > n ? BigInt(0) : binomial(n - 1, p - 1))
             : binomial(n + p - 1, p - 1);
  return to_ulong_checked(d);
}

void add_symbolic_jobs(int n, int p, bool proper, std::vector<CellJob>& jobs) {
  if (!proper) {
    jobs.push_back({n, p, "bareiss_vs_formula", [n, p] {
                      return compare_polys(det_bareiss(build_general(n, p)),
                                           expand_factored(delta_bmx(n, p)),
                                           "bareiss");
                    }});
    if (p >= 3) {
      jobs.push_back({n, p, "recursive_vs_formula", [n, p] {
                        return compare_factored(det_recursive_factored(n, p),
                                                delta_bmx(n, p), "recursive",
                                                "formula");
                      }});
    }
    return;
  }
  jobs.push_back({n, p, "bareiss_vs_formula", [n, p] {
                    return compare_polys(det_bareiss(build_proper(n, p)),
                                         expand_factored(delta_star_x(n, p)),
                                         "bareiss");
                  }});
  jobs.push_back({n, p, "reduction_vs_formula", [n, p] {
                    return compare_factored(proper_reduction_rhs(n, p),
                                            delta_star_x(n, p), "reduction",
                                            "formula");
                  }});
}

template <class Fn>
void for_each_cell(int nmax, int pmax, bool proper, Fn&& fn) {
  for (int n = proper ? 1 : 0; n <= nmax; ++n) {
    for (int p = 1; p <= pmax; ++p) {
      if (proper && p > n) continue;
      fn(n, p);
    }
  }
}

void add_random_jobs(int n, int p, int count, std::uint64_t seed, bool proper,
                     std::vector<CellJob>& jobs) {
  std::mt19937_64 gen(seed);
  auto formula = std::make_shared<FactoredForm>(proper ? delta_star_x(n, p)
                                                       : delta_bmx(n, p));
  for (int k = 0; k < count; ++k) {
    std::vector<BigInt> point = draw_point(gen, p);
    jobs.push_back(
        {n, p, "random_point_" + std::to_string(k),
         [n, p, proper, point = std::move(point), formula]() -> Outcome {
           const PolyMatrix m = proper ? build_proper(n, p) : build_general(n, p);
           const BigInt engine = det_bareiss(specialize(m, point));
           const BigInt expected = evaluate(*formula, point);
           if (engine == expected) return std::nullopt;
           std::string at = "at (";
           for (std::size_t j = 0; j < point.size(); ++j) {
             if (j) at += ",";
             at += point[j].get_str();
           }
           return at + "): " + make_witness("bareiss", engine.get_str(),
                                            "formula", expected.get_str());
         }});
  }
}

// ---------------------------------------------------------------- suites

void add_ci_jobs(std::vector<CellJob>& jobs) {
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; b <= 10; ++b) {
      jobs.push_back({a, b, "ci.vandermonde", [a, b]() -> Outcome {
                        for (int c = 0; c <= 10; ++c) {
                          for (int d = 0; d <= 10; ++d) {
                            if (!check_vandermonde(a, b, c, d)) {
                              return "fails at c=" + std::to_string(c) +
                                     ", d=" + std::to_string(d);
                            }
                          }
                        }
                        return std::nullopt;
                      }});
    }
  }
  for (int n = 0; n <= 12; ++n) {
    for (int a = 0; a <= 10; ++a) {
      jobs.push_back({n, a, "ci.parallel_sum", [n, a] {
                        return verdict(check_parallel_sum(a, n),
                                       "parallel summation fails");
                      }});
      jobs.push_back({n, a, "ci.weighted_sum", [n, a] {
                        return verdict(check_weighted_sum(n, a),
                                       "weighted summation fails");
                      }});
    }
  }
}

void add_xy_jobs(std::vector<CellJob>& jobs) {
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      jobs.push_back({n, r, "xy.dr_closed", [n, r] {
                        return compare_polys(det_bareiss(dr_matrix(r, n)),
                                             expand_factored(dr_closed(r, n)),
                                             "bareiss");
                      }});
    }
  }
}

void add_rec_jobs(std::vector<CellJob>& jobs) {
  for (int r = 0; r <= 5; ++r) {
    for (int j = r + 1; j <= 8; ++j) {
      jobs.push_back({r, j, "rec.vanishing", [r, j]() -> Outcome {
                        const FRTable t = fr_table(r + 1, 8);
                        const RationalFn& f = t(r + 1, r, j);
                        if (f.num().is_zero()) return std::nullopt;
                        return "f_" + std::to_string(r + 1) + "(" +
                               std::to_string(r) + "," + std::to_string(j) +
                               ") = (" + format(f.num()) + ")/(" +
                               format(f.den()) + ")";
                      }});
    }
  }
  for (int r = 0; r <= 6; ++r) {
    jobs.push_back({r, r, "rec.closed", [r]() -> Outcome {
                      const FRTable t = fr_table(r, r);
                      const RationalFn& f = t(r, r, r);
                      const RationalFn g = fr_closed(r);
                      if (ratfn_equal(f, g)) return std::nullopt;
                      return make_witness(
                          "table", format(f.num()) + " / " + format(f.den()),
                          "closed", format(g.num()) + " / " + format(g.den()));
                    }});
  }
  // D_r / D_{r-1} = (y - r)^(n - r) f_r(r, r) on the leading minors.
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= std::min(n, 3); ++r) {
      jobs.push_back({n, r, "rec.quotient", [n, r]() -> Outcome {
                        const PolyMatrix d = dr_matrix(n, n);
                        const RationalFn quotient(
                            det_bareiss(leading_block(d, r + 1)),
                            det_bareiss(leading_block(d, r)));
                        RationalFn expected = fr_closed(r);
                        expected *= RationalFn(
                            pow(MultiPoly::linear(2, kVarY, -r),
                                static_cast<unsigned long>(n - r)));
                        if (ratfn_equal(quotient, expected)) return std::nullopt;
                        return make_witness(
                            "minors",
                            format(quotient.num()) + " / " +
                                format(quotient.den()),
                            "expected",
                            format(expected.num()) + " / " +
                                format(expected.den()));
                      }});
    }
  }
}

void add_equiv_jobs(BinomialCorner corner, std::vector<CellJob>& jobs) {
  for (int n = 1; n <= 25; ++n) {
    for (int p = 1; p <= 25; ++p) {
      jobs.push_back({n, p, "equiv.bm_vs_k", [n, p, corner]() -> Outcome {
                        const FactoredForm bm = delta_bm(n, p, corner);
                        const FactoredForm k = delta_k(n, p);
                        if (equal_as_integers(bm, k)) return std::nullopt;
                        return make_witness("bm", format(bm, {.compact = true}),
                                            "k", format(k, {.compact = true}));
                      }});
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int p = 1; p <= 4; ++p) {
      jobs.push_back({n, p, "equiv.bm_vs_bareiss", [n, p, corner] {
                        return compare_ints(to_integer(delta_bm(n, p, corner)),
                                            det_bareiss(build_integer(n, p)),
                                            "bm", "bareiss");
                      }});
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      jobs.push_back({n, p, "equiv.star_int", [n, p, corner] {
                        const PolyMatrix m = build_proper(n, p);
                        const std::vector<BigInt> zero(
                            static_cast<std::size_t>(p), BigInt(0));
                        return compare_ints(
                            to_integer(delta_star_int(n, p, corner)),
                            det_bareiss(specialize(m, zero)), "star",
                            "bareiss");
                      }});
    }
  }
}

void add_colreduce_jobs(std::vector<CellJob>& jobs) {
  const std::pair<int, int> cases[] = {{1, 2}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [n, p] : cases) {
    jobs.push_back({n, p, "colreduce.block", [n = n, p = p]() -> Outcome {
                      const ColumnReduceReport r = column_reduce(n, p).report;
                      if (r.ok()) return std::nullopt;
                      std::string why;
                      if (!r.diagonal_blocks_match) why += "diagonal blocks differ; ";
                      if (!r.product_matches) {
                        why += make_witness(
                            "blocks",
                            format(r.block_product.num()) + " / " +
                                format(r.block_product.den()),
                            "bareiss", format(r.bareiss_determinant));
                      }
                      return why;
                    }});
  }
  for (int n = 0; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      jobs.push_back({n, p, "colreduce.recursion", [n, p] {
                        return compare_factored(det_recursive_factored(n, p),
                                                delta_bmx(n, p), "recursive",
                                                "formula");
                      }});
    }
  }
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(),
                    [](const VerifyCell& c) { return c.pass; }));
}

std::size_t VerifyReport::failed() const { return cells.size() - passed(); }

void VerifyReport::normalize() {
  std::stable_sort(cells.begin(), cells.end(),
                   [](const VerifyCell& a, const VerifyCell& b) {
                     return std::tie(a.n, a.p, a.check) <
                            std::tie(b.n, b.p, b.check);
                   });
}

void VerifyReport::append(VerifyReport other) {
  for (VerifyCell& c : other.cells) cells.push_back(std::move(c));
}

nlohmann::ordered_json to_json(const VerifyReport& report, bool timings) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const VerifyCell& c : report.cells) {
    nlohmann::ordered_json cell;
    cell["n"] = c.n;
    cell["p"] = c.p;
    cell["check"] = c.check;
    cell["status"] = c.pass ? "pass" : "fail";
    cell["witness"] = c.witness ? nlohmann::ordered_json(*c.witness)
                                : nlohmann::ordered_json(nullptr);
    cell["ms"] = timings ? nlohmann::ordered_json(c.ms)
                         : nlohmann::ordered_json(nullptr);
    cells.push_back(std::move(cell));
  }
  nlohmann::ordered_json out;
  out["cells"] = std::move(cells);
  out["pass"] = report.passed();
  out["fail"] = report.failed();
  return out;
}

std::string summary_line(const VerifyReport& report) {
  const std::size_t total = report.cells.size();
  if (report.ok()) {
    return "pass " + std::to_string(total) + "/" + std::to_string(total);
  }
  return "fail " + std::to_string(report.failed()) + "/" +
         std::to_string(total);
}

std::string make_witness(std::string_view left_name, std::string_view left,
                         std::string_view right_name, std::string_view right) {
  std::string out(left_name);
  out += ": ";
  out += clip(left);
  out += " | ";
  out += right_name;
  out += ": ";
  out += clip(right);
  return out;
}

VerifyReport run_cells(std::vector<CellJob> jobs) {
  VerifyReport report;
  report.cells.resize(jobs.size());
  const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    CellJob& job = jobs[static_cast<std::size_t>(k)];
    VerifyCell& cell = report.cells[static_cast<std::size_t>(k)];
    cell.n = job.n;
    cell.p = job.p;
    cell.check = job.check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cell.witness = job.run();
    } catch (const std::exception& e) {
      cell.witness = std::string("exception: ") + e.what();
    } catch (...) {
      cell.witness = "exception: unknown";
    }
    cell.pass = !cell.witness.has_value();
    cell.ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  }
  report.normalize();
  return report;
}

bool symbolic_cell_within_guard(int n, int p, bool proper) {
  return matrix_dim(n, p, proper) <= kSymbolicMaxDim;
}

bool symbolic_cell_is_cheap(int n, int p, bool proper) {
  if (!symbolic_cell_within_guard(n, p, proper)) return false;
  if (proper && p > n) return true;
  const double dim = static_cast<double>(matrix_dim(n, p, proper));
  const double box =
      std::pow(static_cast<double>(closed_form_degree(n, p, proper) + 1), p);
  return dim * dim * box <= kCheapMaxWork;
}

VerifyReport grid_symbolic(int nmax, int pmax, bool proper) {
  if (nmax < 0 || pmax < 1) {
    throw std::invalid_argument("need nmax >= 0 and pmax >= 1");
  }
  std::vector<CellJob> jobs;
  for_each_cell(nmax, pmax, proper, [&](int n, int p) {
    if (!symbolic_cell_within_guard(n, p, proper)) {
      throw GuardViolation(
          "symbolic cell (" + std::to_string(n) + "," + std::to_string(p) +
          ") has dimension " + std::to_string(matrix_dim(n, p, proper)) +
          " > " + std::to_string(kSymbolicMaxDim) + "; use random points");
    }
    add_symbolic_jobs(n, p, proper, jobs);
  });
  return run_cells(std::move(jobs));
}

std::vector<BigInt> draw_point(std::mt19937_64& gen, int p) {
  constexpr std::uint64_t kSpan = 2 * kPointRadius + 1;
  // Largest multiple of kSpan that fits; draws at or above it are rejected.
  constexpr std::uint64_t kLimit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % kSpan;
  std::vector<BigInt> point;
  point.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    std::uint64_t u = gen();
    while (u >= kLimit) u = gen();
    point.emplace_back(static_cast<long>(u % kSpan) - kPointRadius);
  }
  return point;
}

VerifyReport random_point_check(int n, int p, int count, std::uint64_t seed,
                                bool proper) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  std::vector<CellJob> jobs;
  add_random_jobs(n, p, count, seed, proper, jobs);
  return run_cells(std::move(jobs));
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kCi:
      return "ci";
    case Suite::kXy:
      return "xy";
    case Suite::kRec:
      return "rec";
    case Suite::kEquiv:
      return "equiv";
    case Suite::kColreduce:
      return "colreduce";
  }
  return "";
}

std::vector<Suite> all_suites() {
  return {Suite::kCi, Suite::kXy, Suite::kRec, Suite::kEquiv,
          Suite::kColreduce};
}

VerifyReport identity_suite(std::span<const Suite> suites,
                            BinomialCorner corner) {
  std::vector<CellJob> jobs;
  for (Suite s : suites) {
    switch (s) {
      case Suite::kCi:
        add_ci_jobs(jobs);
        break;
      case Suite::kXy:
        add_xy_jobs(jobs);
        break;
      case Suite::kRec:
        add_rec_jobs(jobs);
        break;
      case Suite::kEquiv:
        add_equiv_jobs(corner, jobs);
        break;
      case Suite::kColreduce:
        add_colreduce_jobs(jobs);
        break;
    }
  }
  return run_cells(std::move(jobs));
}

VerifyReport run_verify(const VerifyRequest& request) {
  if (request.points < 0) throw std::invalid_argument("points must be >= 0");
  if (request.points == 0) {
    return grid_symbolic(request.nmax, request.pmax, request.proper);
  }
  if (request.nmax < 0 || request.pmax < 1) {
    throw std::invalid_argument("need nmax >= 0 and pmax >= 1");
  }
  std::vector<CellJob> jobs;
  for_each_cell(request.nmax, request.pmax, request.proper, [&](int n, int p) {
    if (symbolic_cell_is_cheap(n, p, request.proper)) {
      add_symbolic_jobs(n, p, request.proper, jobs);
    }
    add_random_jobs(n, p, request.points, request.seed, request.proper, jobs);
  });
  return run_cells(std::move(jobs));
}

}  // namespace compdet
