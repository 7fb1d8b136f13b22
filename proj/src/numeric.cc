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

#include "compdet/numeric.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace compdet {

BigInt factorial(long m) {
  if (m < 0) throw std::invalid_argument("factorial of a negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(m));
  return out;
}

BigInt binomial(long a, long b) {
  if (a < 0) {
    throw std::invalid_argument("binomial: upper index " + std::to_string(a) +
                                " < 0 (use binomial_ext)");
  }
  if (b < 0 || b > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

BigInt binomial_ext(long a, long b, BinomialCorner corner) {
  if (a < -1) {
    throw std::invalid_argument("binomial_ext: upper index " +
                                std::to_string(a) + " < -1");
  }
  if (a == -1) {
    return (b == -1 && corner == BinomialCorner::kOne) ? 1 : 0;
  }
  return binomial(a, b);
}

BigInt multinomial(long m, std::span<const long> parts) {
  long total = 0;
  for (long part : parts) {
    if (part < 0) throw std::invalid_argument("multinomial: negative part");
    total += part;
  }
  if (total != m) {
    throw std::invalid_argument("multinomial: parts sum to " +
                                std::to_string(total) + ", expected " +
                                std::to_string(m));
  }
  BigInt out = factorial(m);
  for (long part : parts) out /= factorial(part);
  return out;
}

bool check_vandermonde(long a, long b, long c, long d) {
  // Outside k in [-c, d] one of the two factors vanishes.
  BigInt lhs = 0;
  for (long k = -c; k <= d; ++k) lhs += binomial(a, c + k) * binomial(b, d - k);
  return lhs == binomial(a + b, c + d);
}

bool check_parallel_sum(long a, long n) {
  BigInt by_upper = 0;
  BigInt by_lower = 0;
  for (long k = 0; k <= n; ++k) {
    by_upper += binomial(a + k, a);
    by_lower += binomial(a + k, k);
  }
  const BigInt rhs = binomial(n + a + 1, a + 1);
  return by_upper == rhs && by_lower == rhs;
}

bool check_weighted_sum(long n, long a) {
  BigInt lhs = 0;
  for (long r = 1; r <= n; ++r) lhs += r * binomial(n + a - r, a);
  return lhs == binomial(n + a + 1, a + 2);
}

unsigned long to_ulong_checked(const BigInt& value) {
  if (sgn(value) < 0 || !value.fits_ulong_p()) {
    throw std::overflow_error("exponent " + value.get_str() +
                              " does not fit an unsigned long");
  }
  return value.get_ui();
}

}  // namespace compdet
