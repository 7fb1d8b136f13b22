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

// Acceptance run: one PASS/FAIL line per criterion. Each criterion is an
// exact equality check under a pinned wall-clock limit; the process exits
// non-zero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "compdet/blocktri.h"
#include "compdet/closedform.h"
#include "compdet/det.h"
#include "compdet/dr.h"
#include "compdet/factored.h"
#include "compdet/fr.h"
#include "compdet/numeric.h"
#include "compdet/pcmatrix.h"
#include "compdet/verify.h"

namespace {

using namespace compdet;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  // Returns an empty string on success, a diagnosis otherwise.
  std::function<std::string()> check;
};

std::string cell(const std::string& what, int n, int p) {
  return what + " at (" + std::to_string(n) + "," + std::to_string(p) + ")";
}

std::string anchor() {
  const IntMatrix m = build_integer(2, 2);
  if (m.dim() != 3) return "matrix is not 3x3";
  if (det_cofactor(m) != 16) return "cofactor != 16";
  if (det_bareiss(m) != 16) return "bareiss != 16";
  if (to_integer(delta_bm(2, 2)) != 16) return "product formula (binomial form) != 16";
  if (to_integer(delta_k(2, 2)) != 16) return "product formula (compact form) != 16";
  return "";
}

std::string integer_equivalence() {
  const EquivalenceReport r = check_equivalence(25, 25);
  if (r.cells != 625) return "expected 625 cells, got " + std::to_string(r.cells);
  if (!r.ok()) {
    return cell("mismatch", r.mismatches.front().first, r.mismatches.front().second);
  }
  return "";
}

std::string symbolic_general() {
  std::vector<std::pair<int, int>> cells;
  for (int n = 0; n <= 4; ++n) {
    for (int p = 1; p <= 3; ++p) cells.emplace_back(n, p);
  }
  cells.emplace_back(5, 3);
  for (auto [n, p] : cells) {
    if (expand_factored(delta_bmx(n, p)) != det_bareiss(build_general(n, p))) {
      return cell("symbolic mismatch", n, p);
    }
  }
  return "";
}

std::string univariate() {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 1; p <= 3; ++p) {
      if (expand_factored(delta_kx_univariate(n, p)) != det_bareiss(build_univariate(n, p))) {
        return cell("univariate determinant mismatch", n, p);
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const std::vector<MultiPoly> images(static_cast<std::size_t>(p),
                                          MultiPoly::variable(1, 0));
      if (expand_factored(substitute(delta_bmx(n, p), images, 1)) !=
          expand_factored(delta_kx_univariate(n, p))) {
        return cell("identified-variable mismatch", n, p);
      }
    }
  }
  return "";
}

std::string binomial_identities() {
  for (long a = 0; a <= 10; ++a) {
    for (long b = 0; b <= 10; ++b) {
      for (long c = 0; c <= 10; ++c) {
        for (long d = 0; d <= 10; ++d) {
          if (!check_vandermonde(a, b, c, d)) return "Vandermonde convolution fails";
        }
      }
    }
  }
  for (long a = 0; a <= 10; ++a) {
    for (long n = 0; n <= 12; ++n) {
      if (!check_parallel_sum(a, n)) return "parallel summation fails";
    }
  }
  for (long n = 1; n <= 12; ++n) {
    for (long a = 0; a <= 10; ++a) {
      if (!check_weighted_sum(n, a)) return "weighted summation fails";
    }
  }
  return "";
}

std::string dr_determinants() {
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      if (expand_factored(dr_closed(r, n)) != det_bareiss(dr_matrix(r, n))) {
        return "D_r mismatch at r=" + std::to_string(r) + ", n=" + std::to_string(n);
      }
    }
  }
  return "";
}

std::string fr_recurrence() {
  const FRTable t = fr_table(6, 8);
  for (int r = 0; r <= 5; ++r) {
    for (int j = r + 1; j <= 8; ++j) {
      if (!t(r + 1, r, j).num().is_zero()) return cell("nonzero f_{r+1}(r,j)", r, j);
    }
  }
  for (int r = 0; r <= 6; ++r) {
    if (!ratfn_equal(t(r, r, r), fr_closed(r))) {
      return "f_r(r,r) differs from the closed form at r=" + std::to_string(r);
    }
  }
  return "";
}

std::string column_elimination() {
  for (auto [n, p] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const ColumnReduceReport r = column_reduce(n, p).report;
    if (!r.upper_blocks_zero) return cell("upper block survives", n, p);
    if (!r.diagonal_blocks_match) return cell("diagonal block mismatch", n, p);
    if (!r.product_matches) return cell("block product != determinant", n, p);
  }
  return "";
}

std::string recursion() {
  for (int n = 0; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      // ResidualDenominator propagates if a denominator base survives.
      if (!(det_recursive_factored(n, p) == delta_bmx(n, p))) {
        return cell("recursive factored form mismatch", n, p);
      }
    }
  }
  return "";
}

std::string proper() {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= n; ++p) {
      if (expand_factored(delta_star_x(n, p)) != det_bareiss(build_proper(n, p))) {
        return cell("proper determinant mismatch", n, p);
      }
      if (!(delta_star_x(n, p) == proper_reduction_rhs(n, p))) {
        return cell("proper reduction mismatch", n, p);
      }
    }
  }
  if (to_integer(delta_star_int(3, 2)) != 12) return "delta_star_int(3,2) != 12";
  return "";
}

std::string large_random() {
  for (auto [n, p] : {std::pair{6, 4}, std::pair{7, 3}}) {
    const VerifyReport r = random_point_check(n, p, 3, 20240611, false);
    if (r.cells.size() != 3) return cell("expected three cells", n, p);
    for (const VerifyCell& c : r.cells) {
      if (!c.pass) return cell(c.check + " failed: " + c.witness.value_or(""), n, p);
    }
  }
  return "";
}

std::pair<int, std::string> capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string determinism() {
  const std::string cmd = std::string(COMPDET_CLI_PATH) +
                          " verify --nmax 4 --pmax 3 --points 2 --seed 7 --out - 2>/dev/null";
  const auto first = capture(cmd);
  const auto second = capture(cmd);
  if (first.first != 0) return "first run exited with " + std::to_string(first.first);
  if (second.first != 0) return "second run exited with " + std::to_string(second.first);
  if (first.second.empty()) return "empty report";
  if (first.second != second.second) return "reports differ";
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "integer anchor (2,2) = 16 by four routes", 1, anchor},
      {2, "binomial and compact integer formulas agree, 1 <= n,p <= 25", 30,
       integer_equivalence},
      {3, "symbolic general determinants, n <= 4, p <= 3 and (5,3)", 300,
       symbolic_general},
      {4, "univariate determinants and identified variables", 120, univariate},
      {5, "binomial identity grids", 5, binomial_identities},
      {6, "D_r determinants, 0 <= r <= n <= 5", 30, dr_determinants},
      {7, "f_r recurrence vanishing and diagonal closed form", 30, fr_recurrence},
      {8, "column elimination block structure", 180, column_elimination},
      {9, "block recursion equals the product formula, n <= 6, p <= 4", 10,
       recursion},
      {10, "proper compositions, 1 <= p <= n <= 6", 120, proper},
      {11, "random integer points at (6,4) and (7,3)", 120, large_random},
      {12, "verify reports are byte-identical across runs", 120, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (problem.empty() && seconds > c.limit_seconds) problem = "time limit exceeded";
    const bool pass = problem.empty();
    failures += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << ": "
         << c.name << " [" << std::fixed << std::setprecision(2) << seconds
         << " s, limit " << std::setprecision(0) << c.limit_seconds << " s]";
    if (!pass) line << " -- " << problem;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "FAIL" : "PASS") << " " << (12 - failures) << "/12 criteria"
            << std::endl;
  return failures ? 1 : 0;
}
