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

#ifndef COMPDET_RATIONAL_H_
#define COMPDET_RATIONAL_H_

#include <span>

#include "compdet/poly.h"

namespace compdet {

// num / den with den != 0. Equality is decided by cross-multiplication, so
// two representatives of the same function compare equal whether or not
// they are reduced. Arithmetic results are reduced by a polynomial gcd to
// keep intermediate sizes bounded.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(MultiPoly num);
  // Stored as given (not reduced).
  RationalFn(MultiPoly num, MultiPoly den);

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn reduced() const;

  RationalFn& operator+=(const RationalFn& other);
  RationalFn& operator-=(const RationalFn& other);
  RationalFn& operator*=(const RationalFn& other);
  RationalFn& operator/=(const RationalFn& other);
  RationalFn operator-() const { return RationalFn(-num_, den_); }

  friend RationalFn operator+(RationalFn a, const RationalFn& b) {
    return a += b;
  }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) {
    return a -= b;
  }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) {
    return a *= b;
  }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) {
    return a /= b;
  }
  friend bool operator==(const RationalFn& a, const RationalFn& b);

 private:
  MultiPoly num_;
  MultiPoly den_;
};

bool ratfn_equal(const RationalFn& f, const RationalFn& g);

RationalFn pow(const RationalFn& f, long e);

// Substitutes into numerator and denominator; throws std::domain_error if
// the denominator vanishes identically under the substitution.
RationalFn substitute(const RationalFn& f, std::span<const MultiPoly> images,
                      int nvars_out);

}  // namespace compdet

#endif  // COMPDET_RATIONAL_H_
