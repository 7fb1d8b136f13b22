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

#include "compdet/closedform.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "compdet/comb.h"
#include "compdet/poly.h"

namespace compdet {
namespace {

void require_positive(int n, int p) {
  if (n < 1 || p < 1) {
    throw std::invalid_argument("need n >= 1 and p >= 1, got n=" +
                                std::to_string(n) + ", p=" +
                                std::to_string(p));
  }
}

// x1 + ... + xp + c.
MultiPoly sum_plus(int p, long c) {
  MultiPoly s(p, c);
  for (int v = 0; v < p; ++v) s += MultiPoly::variable(p, v);
  return s;
}

}  // namespace

FactoredForm delta_bm(int n, int p, BinomialCorner corner) {
  require_positive(n, p);
  FactoredForm out(0);
  for (int k = 1; k <= std::min(n, p); ++k) {
    const BigInt outer = binomial(p, k);
    out.multiply_integer(n, binomial(n - 1, k) * outer);
    for (int i = 1; i <= n - k + 1; ++i) {
      const BigInt e = (n - i + 1) * binomial_ext(n - i - 1, k - 2, corner);
      out.multiply_integer(i, e * outer);
    }
  }
  return out;
}

FactoredForm delta_k(int n, int p) {
  require_positive(n, p);
  FactoredForm out(0);
  out.multiply_integer(n, binomial(n + p - 1, p));
  for (int i = 1; i <= n; ++i) {
    out.multiply_integer(i, (n - i + 1) * binomial(n + p - i - 1, p - 2));
  }
  return out;
}

FactoredForm delta_kx_univariate(int n, int p) {
  require_positive(n, p);
  FactoredForm out(1);
  MultiPoly base = MultiPoly::variable(1, 0) * BigInt(p);
  base += MultiPoly(1, n);
  out.multiply(base, binomial(n + p - 1, p));
  for (int i = 1; i <= n; ++i) {
    out.multiply_integer(i, (p - 1) * binomial(n + p - i - 1, p - 1));
  }
  return out;
}

FactoredForm delta_bmx(int n, int p) {
  if (n < 0 || p < 1) {
    throw std::invalid_argument("need n >= 0 and p >= 1");
  }
  FactoredForm out(p);
  out.multiply(sum_plus(p, n), binomial(n + p - 1, p));
  for (int i = 1; i <= n; ++i) {
    out.multiply_integer(i, (p - 1) * binomial(n + p - i - 1, p - 1));
  }
  return out;
}

FactoredForm delta_star_int(int n, int p, BinomialCorner corner) {
  require_positive(n, p);
  FactoredForm out(0);
  if (p > n) return out;
  out.multiply_integer(n, binomial(n - 1, p));
  for (int i = 1; i <= n - p + 1; ++i) {
    out.multiply_integer(
        i, (n - i + 1) * binomial_ext(n - i - 1, p - 2, corner));
  }
  return out;
}

FactoredForm delta_star_x(int n, int p, BinomialCorner corner) {
  require_positive(n, p);
  FactoredForm out(p);
  if (p > n) return out;
  out.multiply(sum_plus(p, n), binomial(n - 1, p));
  for (int i = 1; i <= n - p + 1; ++i) {
    const BigInt e = binomial_ext(n - i - 1, p - 2, corner);
    for (int j = 0; j < p; ++j) out.multiply(MultiPoly::linear(p, j, i), e);
  }
  // The i = n-p+1 factor would carry exponent (p-1) C(p-2, p-1) = 0.
  for (int i = 1; i <= n - p; ++i) {
    out.multiply_integer(i, (p - 1) * binomial(n - i - 1, p - 1));
  }
  return out;
}

FactoredForm proper_reduction_rhs(int n, int p) {
  require_positive(n, p);
  if (p > n) throw std::invalid_argument("need p <= n");
  FactoredForm out = shift_all_vars(delta_bmx(n - p, p), 1);
  for (const Composition& alpha : enumerate_weak(n - p, p)) {
    for (int j = 0; j < p; ++j) {
      out.multiply(MultiPoly::linear(p, j, 1 + alpha[j]));
    }
  }
  return out;
}

EquivalenceReport check_equivalence(int nmax, int pmax,
                                    BinomialCorner corner) {
  if (nmax < 1 || pmax < 1) throw std::invalid_argument("bounds must be >= 1");
  EquivalenceReport report;
  for (int n = 1; n <= nmax; ++n) {
    for (int p = 1; p <= pmax; ++p) {
      ++report.cells;
      if (!equal_as_integers(delta_bm(n, p, corner), delta_k(n, p))) {
        report.mismatches.emplace_back(n, p);
      }
    }
  }
  return report;
}

}  // namespace compdet
