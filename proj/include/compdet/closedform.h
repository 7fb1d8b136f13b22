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

#ifndef COMPDET_CLOSEDFORM_H_
#define COMPDET_CLOSEDFORM_H_

#include <utility>
#include <vector>

#include "compdet/factored.h"
#include "compdet/numeric.h"

namespace compdet {

// Product formulas for power-composition determinants. All results are
// factored; nothing is expanded here. s denotes x1 + ... + xp.

// prod_{k=1..min(n,p)} (n^C(n-1,k) prod_{i=1..n-k+1}
//   i^((n-i+1) C(n-i-1,k-2)))^C(p,k). Integer valued; n, p >= 1.
FactoredForm delta_bm(int n, int p,
                      BinomialCorner corner = BinomialCorner::kOne);

// n^C(n+p-1,p) prod_{i=1..n} i^((n-i+1) C(n+p-i-1,p-2)). n, p >= 1.
FactoredForm delta_k(int n, int p);

// (p x + n)^C(n+p-1,p) prod_{i=1..n} i^((p-1) C(n+p-i-1,p-1)), one
// variable. n, p >= 1.
FactoredForm delta_kx_univariate(int n, int p);

// (s + n)^C(n+p-1,p) prod_{i=1..n} i^((p-1) C(n+p-i-1,p-1)), p variables.
// n >= 0, p >= 1.
FactoredForm delta_bmx(int n, int p);

// Determinant over proper compositions at x = 0:
// n^C(n-1,p) prod_{i=1..n-p+1} i^((n-i+1) C(n-i-1,p-2)). 1 when p > n.
FactoredForm delta_star_int(int n, int p,
                            BinomialCorner corner = BinomialCorner::kOne);

// (s + n)^C(n-1,p) prod_{i=1..n-p+1} prod_{j=1..p} (x_j + i)^C(n-i-1,p-2)
//   prod_{i=1..n-p} i^((p-1) C(n-i-1,p-1)). 1 when p > n.
FactoredForm delta_star_x(int n, int p,
                          BinomialCorner corner = BinomialCorner::kOne);

// delta_bmx(n-p, p) with every variable shifted by one, times
// prod_{alpha in C(n-p, p)} prod_j (x_j + 1 + alpha_j). 1 <= p <= n.
FactoredForm proper_reduction_rhs(int n, int p);

struct EquivalenceReport {
  int cells = 0;
  std::vector<std::pair<int, int>> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// delta_bm(n, p) == delta_k(n, p) as integers for 1 <= n <= nmax,
// 1 <= p <= pmax.
EquivalenceReport check_equivalence(int nmax, int pmax,
                                    BinomialCorner corner =
                                        BinomialCorner::kOne);

}  // namespace compdet

#endif  // COMPDET_CLOSEDFORM_H_
