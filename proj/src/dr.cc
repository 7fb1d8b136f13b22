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

#include "compdet/dr.h"

#include <stdexcept>
#include <string>

#include "compdet/numeric.h"

namespace compdet {
namespace {

void check_range(int r, int n) {
  if (r < 0 || r > n) {
    throw std::invalid_argument("need 0 <= r <= n, got r=" + std::to_string(r) +
                                ", n=" + std::to_string(n));
  }
}

}  // namespace

PolyMatrix dr_matrix(int r, int n) {
  check_range(r, n);
  const auto dim = static_cast<std::size_t>(r) + 1;
  PolyMatrix m(dim, 2);
  for (int i = 0; i <= r; ++i) {
    const MultiPoly y_minus_i = MultiPoly::linear(2, kVarY, -i);
    const MultiPoly z_plus_i = MultiPoly::linear(2, kVarZ, i);
    for (int j = 0; j <= r; ++j) {
      m(i, j) = pow(y_minus_i, static_cast<unsigned long>(n - j)) *
                pow(z_plus_i, static_cast<unsigned long>(j));
    }
  }
  return m;
}

FactoredForm dr_closed(int r, int n) {
  check_range(r, n);
  FactoredForm out(2);
  out.multiply(MultiPoly::variable(2, kVarY) + MultiPoly::variable(2, kVarZ),
               binomial(r + 1, 2));
  if (n > r) {
    for (int i = 0; i <= r; ++i) {
      out.multiply(MultiPoly::linear(2, kVarY, -i), n - r);
    }
  }
  for (int i = 2; i <= r; ++i) out.multiply_integer(i, r - i + 1);
  return out;
}

}  // namespace compdet
