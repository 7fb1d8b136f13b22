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

#ifndef COMPDET_PCMATRIX_H_
#define COMPDET_PCMATRIX_H_

#include <span>

#include "compdet/matrix.h"

namespace compdet {

// Power-composition matrices. Rows and columns are labelled by the same
// composition list; the entry at (alpha, beta) is
// prod_j (x_j + alpha_j)^beta_j, fully expanded, with 0^0 = 1.

// Weak compositions of n into p parts, variables x1..xp.
PolyMatrix build_general(int n, int p);

// Same labels, one variable: prod_j (x + alpha_j)^beta_j.
PolyMatrix build_univariate(int n, int p);

// The x = 0 specialisation: alpha^beta.
IntMatrix build_integer(int n, int p);

// Proper compositions (all parts >= 1), p variables; 0x0 when p > n.
PolyMatrix build_proper(int n, int p);

// Entrywise evaluation at an integer point of length nvars.
IntMatrix specialize(const PolyMatrix& m, std::span<const BigInt> point);

}  // namespace compdet

#endif  // COMPDET_PCMATRIX_H_
