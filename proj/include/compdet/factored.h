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

#ifndef COMPDET_FACTORED_H_
#define COMPDET_FACTORED_H_

#include <map>
#include <span>
#include <vector>

#include "compdet/numeric.h"
#include "compdet/poly.h"

namespace compdet {

struct Factor {
  MultiPoly base;
  BigInt exponent;
};

// constant * prod(base_k ^ exponent_k). Bases are integers >= 2 or
// polynomials of total degree one. The representation is kept canonical:
// the constant is -1, 0 or 1 (any other integer content becomes an integer
// base), equal bases are merged, integer bases are never split into primes,
// and factors are ordered with integer bases first (ascending) and linear
// bases after them in canonical_less order.
class FactoredForm {
 public:
  explicit FactoredForm(int nvars = 0);
  FactoredForm(int nvars, const BigInt& constant);

  int nvars() const { return nvars_; }
  const BigInt& constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return sgn(constant_) == 0; }

  // Multiplies by base^exponent (exponent >= 0).
  void multiply(const MultiPoly& base, const BigInt& exponent = 1);
  void multiply_integer(const BigInt& base, const BigInt& exponent = 1);
  FactoredForm& operator*=(const FactoredForm& other);

  // Multiplicity of `base`, zero when absent.
  BigInt exponent_of(const MultiPoly& base) const;

  // True when every base is a constant.
  bool is_integer_valued() const;

  friend bool operator==(const FactoredForm& a, const FactoredForm& b);

 private:
  int nvars_ = 0;
  BigInt constant_ = 1;
  std::vector<Factor> factors_;
};

MultiPoly expand_factored(const FactoredForm& f);

BigInt evaluate(const FactoredForm& f, std::span<const BigInt> point);

// Integer value of an integer-valued form; only sensible for small values.
BigInt to_integer(const FactoredForm& f);

// Applies the substitution base by base; exponents are kept and bases that
// collide after the substitution are merged.
FactoredForm substitute(const FactoredForm& f,
                        std::span<const MultiPoly> images, int nvars_out);

FactoredForm shift_all_vars(const FactoredForm& f, const BigInt& c);

// Sign and prime exponents of an integer-valued form. Two integer-valued
// forms denote the same integer iff their signatures agree, which lets the
// closed forms be compared exactly even when their values have far too many
// digits to materialise.
struct PrimeSignature {
  int sign = 1;
  std::map<unsigned long, BigInt> exponents;

  friend bool operator==(const PrimeSignature&,
                         const PrimeSignature&) = default;
};

PrimeSignature prime_signature(const FactoredForm& f);

bool equal_as_integers(const FactoredForm& a, const FactoredForm& b);

}  // namespace compdet

#endif  // COMPDET_FACTORED_H_
