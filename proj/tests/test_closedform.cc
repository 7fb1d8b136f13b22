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

#include "compdet/closedform.h"
#include "compdet/det.h"
#include "compdet/pcmatrix.h"
#include "compdet/poly_io.h"
#include "support.h"

namespace compdet {
namespace {

using testing::C;
using testing::X;

BigInt brute_force_integer(int n, int p) {
  return testing::leibniz_det(build_integer(n, p));
}

TEST(DeltaBm, Examples) {
  EXPECT_EQ(to_integer(delta_bm(2, 1)), 4);
  EXPECT_EQ(to_integer(delta_bm(2, 2)), 16);
  EXPECT_EQ(to_integer(delta_bm(3, 2)), 8748);
  EXPECT_EQ(brute_force_integer(3, 2), 8748);
  EXPECT_EQ(brute_force_integer(2, 1), 4);
}

TEST(DeltaBm, CornerZeroBreaksTheOneByOneCase) {
  EXPECT_EQ(to_integer(delta_bm(2, 1, BinomialCorner::kZero)), 2);
  EXPECT_NE(to_integer(delta_bm(3, 2, BinomialCorner::kZero)), 8748);
}

TEST(DeltaK, Examples) {
  EXPECT_EQ(to_integer(delta_k(2, 2)), 16);
  EXPECT_EQ(to_integer(delta_k(3, 2)), 8748);
  for (int n = 1; n <= 8; ++n) {
    BigInt nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n));
    EXPECT_EQ(to_integer(delta_k(n, 1)), nn);
  }
}

TEST(DeltaK, MatchesBruteForceDeterminants) {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 1; p <= 3; ++p) {
      if (build_integer(n, p).dim() > 7) continue;
      EXPECT_EQ(to_integer(delta_k(n, p)), brute_force_integer(n, p)) << n << "," << p;
      EXPECT_EQ(to_integer(delta_bm(n, p)), brute_force_integer(n, p));
    }
  }
}

TEST(DeltaKxUnivariate, Examples) {
  FactoredForm two(1);
  two.multiply_integer(2);
  two.multiply(C(1, 2) * X(1, 0) + C(1, 2), 3);
  EXPECT_EQ(delta_kx_univariate(2, 2), two);
  EXPECT_EQ(expand_factored(delta_kx_univariate(1, 2)), C(1, 2) * X(1, 0) + C(1, 1));
}

TEST(DeltaBmx, Examples) {
  EXPECT_EQ(expand_factored(delta_bmx(1, 2)), X(2, 0) + X(2, 1) + C(2, 1));
  EXPECT_EQ(format(delta_bmx(2, 2)), "2*(x1+x2+2)^3");
  for (int p = 1; p <= 4; ++p) EXPECT_EQ(delta_bmx(0, p), FactoredForm(p));
}

TEST(DeltaBmx, SymbolicAgreementOnSmallGrid) {
  for (int n = 0; n <= 4; ++n) {
    for (int p = 1; p <= 3; ++p) {
      const MultiPoly expanded = expand_factored(delta_bmx(n, p));
      EXPECT_EQ(expanded, det_bareiss(build_general(n, p))) << n << "," << p;
      EXPECT_EQ(expanded.total_degree(),
                to_ulong_checked(binomial(n + p - 1, p)));
      if (n >= 1) {
        EXPECT_EQ(expand_factored(delta_kx_univariate(n, p)),
                  det_bareiss(build_univariate(n, p)));
      }
    }
  }
}

TEST(DeltaBmx, SubstitutionCoherence) {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const std::vector<MultiPoly> images(static_cast<std::size_t>(p), X(1, 0));
      EXPECT_EQ(expand_factored(substitute(delta_bmx(n, p), images, 1)),
                expand_factored(delta_kx_univariate(n, p)));
      const std::vector<BigInt> zero(static_cast<std::size_t>(p), BigInt(0));
      EXPECT_EQ(evaluate(delta_bmx(n, p), zero), to_integer(delta_k(n, p)));
    }
  }
}

TEST(ClosedForm, ExponentRewriteCoherence) {
  for (int p = 1; p <= 20; ++p) {
    for (int n = 1; n <= 20; ++n) {
      for (int i = 1; i <= n; ++i) {
        ASSERT_EQ((n - i + 1) * binomial(n + p - i - 1, p - 2),
                  (p - 1) * binomial(n + p - i - 1, p - 1));
      }
    }
  }
}

TEST(DeltaStar, IntegerExamples) {
  EXPECT_EQ(to_integer(delta_star_int(3, 2)), 12);
  EXPECT_EQ(to_integer(delta_star_int(2, 2)), 1);
  for (int n = 1; n <= 6; ++n) {
    BigInt nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n));
    EXPECT_EQ(to_integer(delta_star_int(n, 1)), nn);
  }
  EXPECT_EQ(to_integer(delta_star_int(2, 3)), 1);
}

TEST(DeltaStar, SymbolicExamples) {
  EXPECT_EQ(format(delta_star_x(3, 2)), "(x1+x2+3)*(x1+1)*(x1+2)*(x2+1)*(x2+2)");
  EXPECT_EQ(expand_factored(delta_star_x(2, 2)), (X(2, 0) + C(2, 1)) * (X(2, 1) + C(2, 1)));
  for (int p = 1; p <= 5; ++p) {
    MultiPoly expected(p, 1);
    for (int j = 0; j < p; ++j) expected *= X(p, j) + C(p, 1);
    EXPECT_EQ(expand_factored(delta_star_x(p, p)), expected);
  }
  EXPECT_EQ(delta_star_x(2, 3), FactoredForm(3));
}

TEST(DeltaStar, ProperReduction) {
  EXPECT_EQ(proper_reduction_rhs(3, 2), delta_star_x(3, 2));
  EXPECT_EQ(expand_factored(proper_reduction_rhs(2, 2)),
            (X(2, 0) + C(2, 1)) * (X(2, 1) + C(2, 1)));
  EXPECT_EQ(proper_reduction_rhs(4, 2), delta_star_x(4, 2));
  EXPECT_THROW(proper_reduction_rhs(2, 3), std::invalid_argument);
}

TEST(DeltaStar, AgreesWithProperDeterminantsOnSmallGrid) {
  for (int n = 1; n <= 5; ++n) {
    for (int p = 1; p <= n; ++p) {
      EXPECT_EQ(expand_factored(delta_star_x(n, p)), det_bareiss(build_proper(n, p)))
          << n << "," << p;
      EXPECT_EQ(delta_star_x(n, p), proper_reduction_rhs(n, p));
      const std::vector<BigInt> zero(static_cast<std::size_t>(p), BigInt(0));
      EXPECT_EQ(to_integer(delta_star_int(n, p)), det_bareiss(specialize(build_proper(n, p), zero)));
    }
  }
}

TEST(Equivalence, FullGrid) {
  const EquivalenceReport report = check_equivalence(25, 25);
  EXPECT_EQ(report.cells, 625);
  EXPECT_TRUE(report.ok());
}

TEST(Equivalence, CornerZeroFailsExactlyWhereTheCornerIsReached) {
  const EquivalenceReport report = check_equivalence(6, 4, BinomialCorner::kZero);
  // n = 1 survives because the affected base is the integer 1.
  EXPECT_EQ(report.mismatches.size(), 5u * 4u);
  for (auto [n, p] : report.mismatches) EXPECT_GE(n, 2);
}

TEST(ClosedForm, RejectsOutOfDomain) {
  EXPECT_THROW(delta_bm(0, 1), std::invalid_argument);
  EXPECT_THROW(delta_k(1, 0), std::invalid_argument);
  EXPECT_THROW(delta_bmx(-1, 1), std::invalid_argument);
  EXPECT_THROW(delta_star_x(0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace compdet
