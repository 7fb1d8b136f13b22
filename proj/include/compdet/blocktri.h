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

#ifndef COMPDET_BLOCKTRI_H_
#define COMPDET_BLOCKTRI_H_

#include <cstddef>
#include <string>
#include <vector>

#include "compdet/factored.h"
#include "compdet/matrix.h"
#include "compdet/rational.h"

namespace compdet {

using RatMatrix = Matrix<RationalFn>;

// Determinant of the general power-composition matrix computed through the
// block recursion on the last coordinate:
//   det M(n, p) = prod_{r=0..n} det M(n-r, p-1) * f_r(r, r)^C(n-r+p-2, p-2)
// with f_r(r, r) taken at y = x1 + ... + x_{p-1} + n, z = x_p. Base cases:
// p = 1 gives (x1 + n)^n and p = 2 is the D_n determinant at y = x1 + n,
// z = x2. Multiplicities are tracked with signed exponents; a base whose
// final exponent is negative raises ResidualDenominator.
FactoredForm det_recursive_factored(int n, int p);

// Largest (n, p) accepted by column_reduce.
inline constexpr int kColumnReduceMaxN = 3;
inline constexpr int kColumnReduceMaxP = 3;

struct ColumnReduceReport {
  // Column/row ranges of the blocks with last coordinate 0..n.
  std::vector<std::size_t> block_sizes;
  // det of each diagonal block of the reduced matrix.
  std::vector<RationalFn> block_determinants;
  RationalFn block_product;
  MultiPoly bareiss_determinant;
  bool upper_blocks_zero = false;
  bool diagonal_blocks_match = false;
  bool product_matches = false;

  bool ok() const {
    return upper_blocks_zero && diagonal_blocks_match && product_matches;
  }
};

struct ColumnReduceResult {
  RatMatrix reduced;
  ColumnReduceReport report;
};

// Performs the column elimination that makes M(n, p) block lower
// triangular: for r = 0..n-1, every column beta with beta_p = j > r receives
// column gamma (gamma_p = r, gamma_k >= beta_k for k < p) times
//   -(s + n - r)^-(j - r) * multinomial(j - r; gamma - beta) * f_r(r,j)/f_r(r,r)
// where s = x1 + ... + x_{p-1} and f_r is instantiated as above. Throws
// GuardViolation outside n <= 3, p <= 3, and BlockNotZero if a block above
// the diagonal is not identically zero afterwards.
ColumnReduceResult column_reduce(int n, int p);

// Gaussian elimination over rational functions; 0x0 gives 1.
RationalFn det_gauss(const RatMatrix& m, int nvars);

}  // namespace compdet

#endif  // COMPDET_BLOCKTRI_H_
