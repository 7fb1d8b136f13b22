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

#ifndef COMPDET_DR_H_
#define COMPDET_DR_H_

#include "compdet/factored.h"
#include "compdet/matrix.h"
#include "compdet/rational.h"

namespace compdet {

// Two-variable objects use x1 = y and x2 = z.
inline constexpr int kVarY = 0;
inline constexpr int kVarZ = 1;

// (r+1) x (r+1) matrix with entry (i, j) = (y - i)^(n - j) (z + i)^j.
// Throws std::invalid_argument unless 0 <= r <= n.
PolyMatrix dr_matrix(int r, int n);

// (y + z)^C(r+1, 2) * prod_{i=0..r} (y - i)^(n - r) * prod_{i=1..r} i^(r-i+1).
FactoredForm dr_closed(int r, int n);

}  // namespace compdet

#endif  // COMPDET_DR_H_
