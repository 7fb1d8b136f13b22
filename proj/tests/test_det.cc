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

#include <vector>

#include "compdet/comb.h"
#include "compdet/det.h"
#include "compdet/dr.h"
#include "compdet/errors.h"
#include "compdet/factored.h"
#include "compdet/pcmatrix.h"
#include "support.h"

namespace compdet {
namespace {

using testing::C;
using testing::Gen;
using testing::X;

TEST(DetCofactor, Examples) {
  EXPECT_EQ(det_cofactor(build_integer(2, 2)), 16);
  EXPECT_EQ(det_cofactor(build_general(1, 2)), X(2, 0) + X(2, 1) + C(2, 1));
  EXPECT_EQ(det_cofactor(IntMatrix(0)), 1);
  EXPECT_EQ(det_cofactor(PolyMatrix(0, 2)), C(2, 1));
}

TEST(DetCofactor, GuardAboveDimensionTen) {
  EXPECT_THROW(det_cofactor(IntMatrix(11, BigInt(1))), DimensionTooLarge);
  EXPECT_THROW(det_cofactor(build_general(3, 4)), GuardViolation);
  EXPECT_NO_THROW(det_cofactor(build_general(2, 4)));
  EXPECT_NO_THROW(det_cofactor(build_integer(3, 3)));
}

TEST(DetBareiss, Examples) {
  EXPECT_EQ(det_bareiss(build_integer(2, 2)), 16);
  EXPECT_EQ(det_bareiss(build_general(2, 2)),
            C(2, 2) * pow(X(2, 0) + X(2, 1) + C(2, 2), 3));
  EXPECT_EQ(det_bareiss(IntMatrix(0)), 1);
  EXPECT_EQ(det_bareiss(build_proper(2, 3)), C(3, 1));
}

TEST(DetBareiss, EqualRowsGiveZero) {
  PolyMatrix m = build_general(2, 2);
  for (std::size_t j = 0; j < m.dim(); ++j) m(2, j) = m(0, j);
  EXPECT_TRUE(det_bareiss(m).is_zero());
  EXPECT_TRUE(det_cofactor(m).is_zero());
  IntMatrix z = build_integer(3, 2);
  for (std::size_t j = 0; j < z.dim(); ++j) z(1, j) = z(3, j);
  EXPECT_EQ(det_bareiss(z), 0);
}

TEST(DetBareiss, PivotsPastZeroColumnsEntries) {
  // Leading entry zero forces a row swap and a sign flip.
  IntMatrix m(3, BigInt(0));
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(2, 2) = 5;
  EXPECT_EQ(det_bareiss(m), -30);
  EXPECT_EQ(det_bareiss_serial(m), -30);
}

TEST(DetEngines, AgreeWithLeibnizOracle) {
  for (int n = 0; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      if (build_integer(n, p).dim() > 7) continue;
      const IntMatrix mi = build_integer(n, p);
      const BigInt oracle = testing::leibniz_det(mi);
      EXPECT_EQ(det_bareiss(mi), oracle);
      EXPECT_EQ(det_cofactor(mi), oracle);
      const PolyMatrix mp = build_general(n, p);
      const MultiPoly poly_oracle = testing::leibniz_det(mp);
      EXPECT_EQ(det_bareiss(mp), poly_oracle) << n << "," << p;
      EXPECT_EQ(det_cofactor(mp), poly_oracle);
    }
  }
}

TEST(DetEngines, CofactorAndBareissAgreeUpToDimTen) {
  for (int n = 0; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const PolyMatrix g = build_general(n, p);
      if (g.dim() > 10) continue;
      EXPECT_EQ(det_cofactor(g), det_bareiss(g));
      EXPECT_EQ(det_cofactor(build_integer(n, p)), det_bareiss(build_integer(n, p)));
      if (n >= 1) {
        const PolyMatrix q = build_proper(n, p);
        EXPECT_EQ(det_cofactor(q), det_bareiss(q));
      }
    }
  }
}

TEST(DetEngines, SerialAndParallelAgree) {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 2; p <= 3; ++p) {
      BareissStats a;
      BareissStats b;
      const PolyMatrix m = build_general(n, p);
      EXPECT_EQ(det_bareiss(m, &a), det_bareiss_serial(m, &b));
      EXPECT_EQ(a.peak_terms, b.peak_terms);
      EXPECT_GE(a.peak_terms, 1u);
    }
  }
}

TEST(DetBareissProperty, RandomIntegerMatrices) {
  Gen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.range(1, 6));
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        m(i, j) = gen.range(0, 2) ? BigInt(gen.range(-20, 20)) : BigInt(0);
      }
    }
    ASSERT_EQ(det_bareiss(m), testing::leibniz_det(m));
  }
}

TEST(DetBareissProperty, RandomPolynomialMatrices) {
  Gen gen(22);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.range(1, 5));
    PolyMatrix m(dim, 2);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = gen.poly(2, 3, 4, 9);
    }
    ASSERT_EQ(det_bareiss(m), testing::leibniz_det(m));
    ASSERT_EQ(det_bareiss_serial(m), testing::leibniz_det(m));
  }
}

TEST(DetBareiss, InvariantUnderSimultaneousReordering) {
  // Paper order against ascending lexicographic order of the labels.
  for (int n = 0; n <= 3; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const PolyMatrix m = build_general(n, p);
      const CompositionList& labels = *m.labels();
      std::vector<std::size_t> order(m.dim());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return labels[a] < labels[b];
      });
      PolyMatrix r(m.dim(), p);
      for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = m(order[i], order[j]);
      }
      EXPECT_EQ(det_bareiss(r), det_bareiss(m));
    }
  }
}

TEST(DrMatrix, Examples) {
  const MultiPoly y = X(2, kVarY);
  const MultiPoly z = X(2, kVarZ);
  const PolyMatrix m = dr_matrix(1, 1);
  ASSERT_EQ(m.dim(), 2u);
  EXPECT_EQ(m(0, 0), y);
  EXPECT_EQ(m(0, 1), z);
  EXPECT_EQ(m(1, 0), y - C(2, 1));
  EXPECT_EQ(m(1, 1), z + C(2, 1));
  EXPECT_EQ(dr_matrix(0, 0)(0, 0), C(2, 1));
  EXPECT_EQ(dr_matrix(0, 3)(0, 0), pow(y, 3));
  EXPECT_THROW(dr_matrix(2, 1), std::invalid_argument);
}

TEST(DrClosed, Examples) {
  const MultiPoly y = X(2, kVarY);
  const MultiPoly z = X(2, kVarZ);
  EXPECT_EQ(expand_factored(dr_closed(1, 1)), y + z);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(expand_factored(dr_closed(0, n)), pow(y, static_cast<unsigned long>(n)));
  }
  EXPECT_EQ(expand_factored(dr_closed(2, 2)), C(2, 2) * pow(y + z, 3));
}

TEST(DrClosed, MatchesEliminationAndCofactor) {
  for (int n = 0; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      const PolyMatrix m = dr_matrix(r, n);
      const MultiPoly closed = expand_factored(dr_closed(r, n));
      EXPECT_EQ(det_bareiss(m), closed) << r << "," << n;
      if (m.dim() <= 5) {
        EXPECT_EQ(testing::leibniz_det(m), closed);
      }
    }
  }
}

TEST(LeadingBlock, TakesTopLeftCornerAndClamps) {
  const PolyMatrix m = build_general(2, 2);
  const PolyMatrix b = leading_block(m, 2);
  ASSERT_EQ(b.dim(), 2u);
  EXPECT_EQ(b(1, 0), m(1, 0));
  EXPECT_EQ(leading_block(m, 0).dim(), 0u);
  EXPECT_EQ(leading_block(m, 4).dim(), 3u);
}

}  // namespace
}  // namespace compdet
