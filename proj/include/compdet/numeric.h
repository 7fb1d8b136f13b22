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

#ifndef COMPDET_NUMERIC_H_
#define COMPDET_NUMERIC_H_

#include <gmpxx.h>

#include <span>

namespace compdet {

using BigInt = mpz_class;

// Value given to C(-1,-1). kOne is the convention under which the integer
// product formulas reproduce the brute-force determinants at their
// boundary (p = 1, or k = 1 with i = n). kZero exists so that the
// identity harness can be mutation-tested against it.
enum class BinomialCorner { kOne, kZero };

BigInt factorial(long m);

// C(a, b) for a >= 0; zero outside 0 <= b <= a.
BigInt binomial(long a, long b);

// C(a, b) extended to a = -1: C(-1,-1) is fixed by `corner`, every other
// C(-1, b) is zero.
BigInt binomial_ext(long a, long b,
                    BinomialCorner corner = BinomialCorner::kOne);

// m! / prod(parts_i!). Throws std::invalid_argument unless sum(parts) == m.
BigInt multinomial(long m, std::span<const long> parts);

// Identity checks. They return a verdict instead of asserting so callers
// can aggregate failures.
bool check_vandermonde(long a, long b, long c, long d);
bool check_parallel_sum(long a, long n);
bool check_weighted_sum(long n, long a);

// Narrowing helper for exponents that must be materialised.
unsigned long to_ulong_checked(const BigInt& value);

}  // namespace compdet

#endif  // COMPDET_NUMERIC_H_
