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

#include "compdet/fr.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace compdet {

FRTable::FRTable(int rmax, int jmax)
    : rmax_(rmax), jmax_(jmax), bound_(std::max(rmax, jmax)) {
  if (rmax < 0 || jmax < 0) {
    throw std::invalid_argument("table bounds must be nonnegative");
  }
  const int width = bound_ + 1;
  values_.resize(static_cast<std::size_t>(rmax + 1) * width * width);
  auto at = [&](int r, int i, int j) -> RationalFn& {
    return values_[(static_cast<std::size_t>(r) * width + i) * width + j];
  };
  for (int i = 0; i < width; ++i) {
    const MultiPoly z_plus_i = MultiPoly::linear(2, kVarZ, i);
    MultiPoly power(2, 1);
    for (int j = 0; j < width; ++j) {
      at(0, i, j) = RationalFn(power);
      power *= z_plus_i;
    }
  }
  for (int r = 0; r < rmax; ++r) {
    const RationalFn y_minus_r(MultiPoly::linear(2, kVarY, -r));
    for (int i = 0; i < width; ++i) {
      const RationalFn ratio =
          RationalFn(MultiPoly::linear(2, kVarY, -i)) / y_minus_r;
      // f_r(i, r) / f_r(r, r), shared by every j of this row.
      const RationalFn scale = at(r, i, r) / at(r, r, r);
      for (int j = 0; j < width; ++j) {
        if (j <= r) {
          at(r + 1, i, j) = at(r, i, j);
          continue;
        }
        at(r + 1, i, j) = at(r, i, j) - pow(ratio, j - r) * scale * at(r, r, j);
      }
    }
  }
}

const RationalFn& FRTable::operator()(int r, int i, int j) const {
  if (r < 0 || r > rmax_ || i < 0 || i > bound_ || j < 0 || j > bound_) {
    throw std::out_of_range("f_" + std::to_string(r) + "(" + std::to_string(i) +
                            "," + std::to_string(j) + ") outside the table");
  }
  const int width = bound_ + 1;
  return values_[(static_cast<std::size_t>(r) * width + i) * width + j];
}

FRTable fr_table(int rmax, int jmax) { return FRTable(rmax, jmax); }

FactoredQuotient fr_closed_factored(int r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  FactoredQuotient q{FactoredForm(2), FactoredForm(2)};
  q.num.multiply(MultiPoly::variable(2, kVarY) + MultiPoly::variable(2, kVarZ),
                 r);
  for (int i = 2; i <= r; ++i) q.num.multiply_integer(i);
  for (int i = 0; i < r; ++i) q.den.multiply(MultiPoly::linear(2, kVarY, -i));
  return q;
}

RationalFn fr_closed(int r) {
  const FactoredQuotient q = fr_closed_factored(r);
  return RationalFn(expand_factored(q.num), expand_factored(q.den)).reduced();
}

}  // namespace compdet
