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

#ifndef COMPDET_KRONECKER_H_
#define COMPDET_KRONECKER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "compdet/numeric.h"
#include "compdet/poly.h"

namespace compdet {

// Kronecker substitution x_v -> t^stride_v, t -> 2^(64 * slot_limbs), a ring
// homomorphism Z[x1..xv] -> Z. Any polynomial packs; unpacking recovers a
// polynomial exactly when each exponent of x_v is below bounds[v] and every
// coefficient is below 2^(64 * slot_limbs - 1) in absolute value. Large
// products and exact quotients then become single GMP operations.
class KroneckerPacking {
 public:
  // bounds[v] >= 1 is the exclusive exponent bound for x_v.
  KroneckerPacking(std::vector<std::uint32_t> bounds, std::size_t coeff_bits);

  std::size_t slots() const { return slots_; }
  std::size_t slot_limbs() const { return slot_limbs_; }

  BigInt pack(const MultiPoly& f) const;

  // Balanced base-2^(64 * slot_limbs) digits of `value`, read back as a
  // polynomial over nvars variables. Returns nullopt when `value` does not
  // fit in the slot box.
  std::optional<MultiPoly> unpack(const BigInt& value, int nvars) const;

 private:
  std::vector<std::uint32_t> bounds_;
  std::vector<std::size_t> strides_;
  std::size_t slots_ = 1;
  std::size_t slot_limbs_ = 1;
};

// (a*b - c*d) / p for an exact quotient that fits `packing`. Throws
// NotDivisible when the packed division leaves a remainder or the quotient
// falls outside the box.
MultiPoly packed_cross_quotient(const KroneckerPacking& packing,
                                const BigInt& a, const BigInt& b,
                                const BigInt& c, const BigInt& d,
                                const BigInt& p, int nvars);

}  // namespace compdet

#endif  // COMPDET_KRONECKER_H_
