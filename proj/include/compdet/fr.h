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

#ifndef COMPDET_FR_H_
#define COMPDET_FR_H_

#include <vector>

#include "compdet/dr.h"
#include "compdet/factored.h"
#include "compdet/rational.h"

namespace compdet {

// f_r(i, j) in Q(y, z), defined by
//   f_0(i, j)     = (z + i)^j
//   f_{r+1}(i, j) = f_r(i, j)                                        j <= r
//   f_{r+1}(i, j) = f_r(i, j)
//                   - ((y - i)/(y - r))^(j - r) f_r(i, r) f_r(r, j) / f_r(r, r)
//                                                                    j > r
// Levels run over 0..rmax and both indices over 0..max(rmax, jmax).
class FRTable {
 public:
  FRTable(int rmax, int jmax);

  int rmax() const { return rmax_; }
  int jmax() const { return jmax_; }
  // Largest valid i or j.
  int index_bound() const { return bound_; }

  // Throws std::out_of_range outside the table.
  const RationalFn& operator()(int r, int i, int j) const;

 private:
  int rmax_;
  int jmax_;
  int bound_;
  std::vector<RationalFn> values_;
};

FRTable fr_table(int rmax, int jmax);

// f_r(r, r) = (y + z)^r r! / prod_{i=0..r-1} (y - i), as a reduced quotient.
RationalFn fr_closed(int r);

// The same quotient with numerator and denominator kept factored; the
// numerator holds (y + z)^r and the integers 2..r, the denominator the
// linear factors (y - i).
struct FactoredQuotient {
  FactoredForm num;
  FactoredForm den;
};
FactoredQuotient fr_closed_factored(int r);

}  // namespace compdet

#endif  // COMPDET_FR_H_
