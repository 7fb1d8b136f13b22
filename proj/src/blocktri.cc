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

#include "compdet/blocktri.h"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "compdet/comb.h"
#include "compdet/det.h"
#include "compdet/dr.h"
#include "compdet/errors.h"
#include "compdet/fr.h"
#include "compdet/numeric.h"
#include "compdet/pcmatrix.h"
#include "compdet/poly_io.h"

namespace compdet {
namespace {

struct BaseLess {
  bool operator()(const MultiPoly& a, const MultiPoly& b) const {
    return canonical_less(a, b);
  }
};

// Signed multiplicity of every base seen so far.
struct Ledger {
  int sign = 1;
  std::map<MultiPoly, BigInt, BaseLess> exponents;

  void add(const FactoredForm& f, const BigInt& multiplicity) {
    if (f.is_zero()) throw InvariantViolation("zero factor in recursion");
    if (sgn(f.constant()) < 0 && mpz_odd_p(multiplicity.get_mpz_t())) {
      sign = -sign;
    }
    for (const Factor& factor : f.factors()) {
      exponents[factor.base] += factor.exponent * multiplicity;
    }
  }
};

// s = x1 + ... + x_{count}, over nvars variables.
MultiPoly partial_sum(int nvars, int count) {
  MultiPoly s(nvars);
  for (int k = 0; k < count; ++k) s += MultiPoly::variable(nvars, k);
  return s;
}

// Images of (y, z) = (x1 + ... + x_{p-1} + n, x_p) in p variables.
std::vector<MultiPoly> substitution_images(int n, int p) {
  return {partial_sum(p, p - 1) + MultiPoly(p, n),
          MultiPoly::variable(p, p - 1)};
}

FactoredForm recursive(int n, int p,
                       std::map<std::pair<int, int>, FactoredForm>& memo) {
  if (auto it = memo.find({n, p}); it != memo.end()) return it->second;
  FactoredForm out(p);
  if (p == 1) {
    out.multiply(MultiPoly::linear(1, 0, n), n);
  } else if (p == 2) {
    out = substitute(dr_closed(n, n), substitution_images(n, 2), 2);
  } else {
    std::vector<MultiPoly> embed;
    for (int k = 0; k < p - 1; ++k) embed.push_back(MultiPoly::variable(p, k));
    const std::vector<MultiPoly> images = substitution_images(n, p);

    Ledger ledger;
    for (int r = 0; r <= n; ++r) {
      ledger.add(substitute(recursive(n - r, p - 1, memo), embed, p), 1);
      const BigInt multiplicity = binomial(n - r + p - 2, p - 2);
      const FactoredQuotient f = fr_closed_factored(r);
      ledger.add(substitute(f.num, images, p), multiplicity);
      ledger.add(substitute(f.den, images, p), -multiplicity);
    }
    out = FactoredForm(p, ledger.sign);
    for (const auto& [base, exponent] : ledger.exponents) {
      if (sgn(exponent) < 0) {
        throw ResidualDenominator("base " + format(base) + " kept exponent " +
                                  exponent.get_str() + " in det M(" +
                                  std::to_string(n) + "," +
                                  std::to_string(p) + ")");
      }
      out.multiply(base, exponent);
    }
  }
  memo.emplace(std::make_pair(n, p), out);
  return out;
}

bool dominates(const Composition& gamma, const Composition& beta,
               std::size_t upto) {
  for (std::size_t k = 0; k < upto; ++k) {
    if (gamma[k] < beta[k]) return false;
  }
  return true;
}

}  // namespace

FactoredForm det_recursive_factored(int n, int p) {
  if (n < 0 || p < 1) {
    throw std::invalid_argument("need n >= 0 and p >= 1");
  }
  std::map<std::pair<int, int>, FactoredForm> memo;
  return recursive(n, p, memo);
}

RationalFn det_gauss(const RatMatrix& m, int nvars) {
  const std::size_t n = m.dim();
  RatMatrix a = m;
  RationalFn det(MultiPoly(nvars, 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return RationalFn(MultiPoly(nvars));
    if (pivot != k) {
      a.swap_rows(k, pivot);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const RationalFn factor = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j) -= factor * a(k, j);
      }
    }
  }
  return det;
}

ColumnReduceResult column_reduce(int n, int p) {
  if (n < 0 || p < 1) throw std::invalid_argument("need n >= 0 and p >= 1");
  if (n > kColumnReduceMaxN || p > kColumnReduceMaxP) {
    throw GuardViolation("column_reduce limited to n <= " +
                         std::to_string(kColumnReduceMaxN) + ", p <= " +
                         std::to_string(kColumnReduceMaxP));
  }
  const PolyMatrix original = build_general(n, p);
  const CompositionList& labels = *original.labels();
  const std::size_t dim = original.dim();
  const std::size_t last = static_cast<std::size_t>(p) - 1;

  RatMatrix a(dim);
  a.set_labels(original.labels());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) a(r, c) = RationalFn(original(r, c));
  }

  const FRTable table = fr_table(n, n);
  const std::vector<MultiPoly> images = substitution_images(n, p);
  auto f_at = [&](int r, int i, int j) {
    return substitute(table(r, i, j), images, p);
  };
  const MultiPoly s = partial_sum(p, p - 1);

  for (int r = 0; r < n; ++r) {
    const RationalFn f_rr = f_at(r, r, r);
    const RationalFn shift_power_base(s + MultiPoly(p, n - r));
    for (std::size_t col = 0; col < dim; ++col) {
      const Composition& beta = labels[col];
      const int j = beta[last];
      if (j <= r) continue;
      const RationalFn common =
          -(f_at(r, r, j) / f_rr) / pow(shift_power_base, j - r);
      for (std::size_t src = 0; src < dim; ++src) {
        const Composition& gamma = labels[src];
        if (gamma[last] != r || !dominates(gamma, beta, last)) continue;
        std::vector<long> delta;
        for (std::size_t k = 0; k < last; ++k) delta.push_back(gamma[k] - beta[k]);
        RationalFn multiplier = common;
        multiplier *= RationalFn(MultiPoly(p, multinomial(j - r, delta)));
        for (std::size_t row = 0; row < dim; ++row) {
          if (!a(row, src).is_zero()) a(row, col) += a(row, src) * multiplier;
        }
      }
    }
  }

  ColumnReduceReport report;
  report.block_sizes.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<std::size_t>> blocks(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < dim; ++k) {
    blocks[labels[k][last]].push_back(k);
    ++report.block_sizes[labels[k][last]];
  }

  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const int i = labels[row][last];
      const int j = labels[col][last];
      if (j > i && !a(row, col).is_zero()) {
        throw BlockNotZero("block (" + std::to_string(i) + "," +
                           std::to_string(j) + ") of M(" + std::to_string(n) +
                           "," + std::to_string(p) + ") is not zero");
      }
    }
  }
  report.upper_blocks_zero = true;

  report.diagonal_blocks_match = true;
  report.block_product = RationalFn(MultiPoly(p, 1));
  for (int r = 0; r <= n; ++r) {
    const RationalFn f_rr = f_at(r, r, r);
    const MultiPoly last_factor =
        pow(MultiPoly::linear(p, p - 1, r), static_cast<unsigned long>(r));
    const auto& idx = blocks[r];
    RatMatrix block(idx.size());
    for (std::size_t u = 0; u < idx.size(); ++u) {
      for (std::size_t v = 0; v < idx.size(); ++v) {
        block(u, v) = a(idx[u], idx[v]);
        const RationalFn expected =
            RationalFn(exact_div(original(idx[u], idx[v]), last_factor)) * f_rr;
        if (!ratfn_equal(block(u, v), expected)) {
          report.diagonal_blocks_match = false;
        }
      }
    }
    report.block_determinants.push_back(det_gauss(block, p));
    report.block_product *= report.block_determinants.back();
  }
  report.bareiss_determinant = det_bareiss(original);
  report.product_matches = ratfn_equal(report.block_product,
                                       RationalFn(report.bareiss_determinant));
  return {std::move(a), std::move(report)};
}

}  // namespace compdet
