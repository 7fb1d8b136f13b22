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

#ifndef COMPDET_DET_H_
#define COMPDET_DET_H_

#include <cstddef>

#include "compdet/matrix.h"

namespace compdet {

// Largest dimension accepted by the cofactor engine.
inline constexpr std::size_t kCofactorMaxDim = 10;

// Laplace expansion along the first row, memoised on the set of columns
// still available. The 0x0 matrix has determinant 1. Throws
// DimensionTooLarge above kCofactorMaxDim.
BigInt det_cofactor(const IntMatrix& m);
MultiPoly det_cofactor(const PolyMatrix& m);

struct BareissStats {
  // Largest number of terms held by any entry during elimination (1 per
  // entry for integer matrices).
  std::size_t peak_terms = 0;
};

// Fraction-free elimination. A zero pivot is replaced by the first nonzero
// entry below it (the sign flips with every swap); a column with no nonzero
// candidate means the determinant is zero. A failed exact division throws
// NotDivisible. The entry updates of one elimination step run in parallel.
BigInt det_bareiss(const IntMatrix& m, BareissStats* stats = nullptr);
MultiPoly det_bareiss(const PolyMatrix& m, BareissStats* stats = nullptr);

// Single-threaded reference implementation of the same algorithm.
BigInt det_bareiss_serial(const IntMatrix& m, BareissStats* stats = nullptr);
MultiPoly det_bareiss_serial(const PolyMatrix& m,
                             BareissStats* stats = nullptr);

// Top-left k x k block, keeping nvars.
PolyMatrix leading_block(const PolyMatrix& m, std::size_t k);

}  // namespace compdet

#endif  // COMPDET_DET_H_
