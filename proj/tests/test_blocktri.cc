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

#include <gtest/gtest.h>

#include "compdet/blocktri.h"
#include "compdet/closedform.h"
#include "compdet/det.h"
#include "compdet/errors.h"
#include "compdet/pcmatrix.h"
#include "support.h"

namespace compdet {
namespace {

using testing::C;
using testing::X;

MultiPoly sum_plus(int p, long c) {
  MultiPoly s(p, c);
  for (int v = 0; v < p; ++v) s += X(p, v);
  return s;
}

TEST(DetRecursive, Examples) {
  for (int n = 0; n <= 6; ++n) {
    FactoredForm expected(1);
    expected.multiply(X(1, 0) + C(1, n), n);
    EXPECT_EQ(det_recursive_factored(n, 1), expected);
  }
  FactoredForm two(2);
  two.multiply_integer(2);
  two.multiply(sum_plus(2, 2), 3);
  EXPECT_EQ(det_recursive_factored(2, 2), two);
  for (int p = 1; p <= 4; ++p) EXPECT_EQ(det_recursive_factored(0, p), FactoredForm(p));
}

TEST(DetRecursive, MatchesEliminationOnSmallGrid) {
  for (int n = 0; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      EXPECT_EQ(expand_factored(det_recursive_factored(n, p)),
                det_bareiss(build_general(n, p)))
          << n << "," << p;
    }
  }
}

TEST(DetRecursive, TelescopingLeavesOnlyFullSumBases) {
  for (int n = 0; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const FactoredForm f = det_recursive_factored(n, p);
      EXPECT_EQ(f, delta_bmx(n, p));
      for (const Factor& factor : f.factors()) {
        if (factor.base.is_constant()) continue;
        EXPECT_EQ(factor.base, sum_plus(p, n)) << n << "," << p;
      }
      EXPECT_EQ(f.exponent_of(sum_plus(p, n)), binomial(n + p - 1, p));
    }
  }
}

TEST(DetRecursive, RejectsBadArguments) {
  EXPECT_THROW(det_recursive_factored(-1, 2), std::invalid_argument);
  EXPECT_THROW(det_recursive_factored(2, 0), std::invalid_argument);
}

TEST(ColumnReduce, BlockStructure) {
  for (auto [n, p] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const ColumnReduceResult result = column_reduce(n, p);
    const ColumnReduceReport& r = result.report;
    EXPECT_TRUE(r.upper_blocks_zero) << n << "," << p;
    EXPECT_TRUE(r.diagonal_blocks_match) << n << "," << p;
    EXPECT_TRUE(r.product_matches) << n << "," << p;
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.block_sizes.size(), static_cast<std::size_t>(n) + 1);
    EXPECT_EQ(r.bareiss_determinant, det_bareiss(build_general(n, p)));
    EXPECT_TRUE(ratfn_equal(det_gauss(result.reduced, p),
                            RationalFn(r.bareiss_determinant)));
  }
}

TEST(ColumnReduce, GuardOutsideDeskBudget) {
  EXPECT_THROW(column_reduce(4, 2), GuardViolation);
  EXPECT_THROW(column_reduce(2, 4), GuardViolation);
}

TEST(DetGauss, AgreesWithBareissOnPolynomialMatrices) {
  for (int n = 0; n <= 2; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const PolyMatrix m = build_general(n, p);
      RatMatrix r(m.dim());
      for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = RationalFn(m(i, j));
      }
      EXPECT_TRUE(ratfn_equal(det_gauss(r, p), RationalFn(det_bareiss(m))));
    }
  }
  EXPECT_TRUE(ratfn_equal(det_gauss(RatMatrix(0), 2), RationalFn(C(2, 1))));
}

}  // namespace
}  // namespace compdet
