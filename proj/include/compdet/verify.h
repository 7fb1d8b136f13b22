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

#ifndef COMPDET_VERIFY_H_
#define COMPDET_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compdet/numeric.h"
#include "json.hpp"

namespace compdet {

struct VerifyCell {
  int n = 0;
  int p = 0;
  std::string check;
  bool pass = false;
  // Present on every failing cell.
  std::optional<std::string> witness;
  double ms = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCell> cells;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  // Sorts cells by (n, p, check).
  void normalize();
  void append(VerifyReport other);
};

// {"cells":[{"n","p","check","status","witness","ms"}],"pass","fail"}.
// "ms" is null unless `timings` is set, so that reports of identical runs
// are byte-identical.
nlohmann::ordered_json to_json(const VerifyReport& report, bool timings);

// "pass 20/20" or "fail 3/20".
std::string summary_line(const VerifyReport& report);

// One named check; returns a witness string on failure, nullopt on success.
struct CellJob {
  int n;
  int p;
  std::string check;
  std::function<std::optional<std::string>()> run;
};

// Runs the jobs concurrently; an exception inside a job fails that cell.
VerifyReport run_cells(std::vector<CellJob> jobs);

// Canonical text of both sides, each truncated at 4096 characters and
// followed by the FNV-1a 64-bit hash of its full text.
std::string make_witness(std::string_view left_name, std::string_view left,
                         std::string_view right_name, std::string_view right);

inline constexpr std::size_t kWitnessMaxChars = 4096;

// Symbolic cells need matrix dimension <= 40.
inline constexpr std::size_t kSymbolicMaxDim = 40;
bool symbolic_cell_within_guard(int n, int p, bool proper);

// In point mode a symbolic cell is added only when it is also cheap. The
// work estimate dim^2 * (deg + 1)^p follows the packed elimination, whose
// products live in a box of (deg + 1)^p slots.
inline constexpr double kCheapMaxWork = 5e6;
bool symbolic_cell_is_cheap(int n, int p, bool proper);

// Weak grid: n = 0..nmax, p = 1..pmax, checks "bareiss_vs_formula" and, for
// p >= 3, "recursive_vs_formula". Proper grid: 1 <= p <= min(n, pmax),
// checks "bareiss_vs_formula" and "reduction_vs_formula". Throws
// GuardViolation if any cell is outside the symbolic guard.
VerifyReport grid_symbolic(int nmax, int pmax, bool proper);

// Uniform draws from [-1000, 1000] by rejection sampling on a
// std::mt19937_64 stream, so points are identical on every platform.
inline constexpr long kPointRadius = 1000;
std::vector<BigInt> draw_point(std::mt19937_64& gen, int p);

// `count` cells "random_point_<k>" comparing the integer Bareiss
// determinant at a drawn point with the factored closed form evaluated
// there. The generator is seeded with `seed` on every call.
VerifyReport random_point_check(int n, int p, int count, std::uint64_t seed,
                                bool proper);

enum class Suite { kCi, kXy, kRec, kEquiv, kColreduce };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
std::vector<Suite> all_suites();

// Fixed identity suites. `corner` feeds every product formula that uses the
// extended binomial, which makes the suite usable as a mutation test.
VerifyReport identity_suite(std::span<const Suite> suites,
                            BinomialCorner corner = BinomialCorner::kOne);

struct VerifyRequest {
  int nmax = 0;
  int pmax = 1;
  bool proper = false;
  int points = 0;
  std::uint64_t seed = 0;
};

// The verify command: with points == 0, grid_symbolic over the whole range
// (guard violations propagate); otherwise symbolic cells wherever they are
// cheap, plus random-point cells for every (n, p) in range.
VerifyReport run_verify(const VerifyRequest& request);

}  // namespace compdet

#endif  // COMPDET_VERIFY_H_
