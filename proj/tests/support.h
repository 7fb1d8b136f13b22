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

#ifndef COMPDET_TESTS_SUPPORT_H_
#define COMPDET_TESTS_SUPPORT_H_

// Shared generators and brute-force oracles for the unit tests. The
// generators are deliberately simple: a fixed-seed mt19937_64 stream and
// rejection-free modular draws, which is plenty for property checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "compdet/matrix.h"
#include "compdet/numeric.h"
#include "compdet/poly.h"

namespace compdet::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  // Uniform-enough integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  BigInt big(int digits) {
    BigInt v = 0;
    for (int k = 0; k < digits; ++k) v = v * 10 + range(0, 9);
    return range(0, 1) ? v : BigInt(-v);
  }

  // Up to max_terms terms, each exponent <= max_degree in total, coefficients
  // in [-coeff, coeff].
  MultiPoly poly(int nvars, int max_degree, int max_terms, long coeff) {
    std::vector<Term> terms;
    const long count = range(0, max_terms);
    for (long t = 0; t < count; ++t) {
      std::vector<std::uint32_t> exps(static_cast<std::size_t>(nvars), 0);
      long budget = range(0, max_degree);
      for (int v = 0; v < nvars && budget > 0; ++v) {
        const long e = range(0, budget);
        exps[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(e);
        budget -= e;
      }
      terms.push_back({Monomial(exps), BigInt(range(-coeff, coeff))});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
  }

  MultiPoly nonzero_poly(int nvars, int max_degree, int max_terms, long coeff) {
    for (;;) {
      MultiPoly f = poly(nvars, max_degree, max_terms, coeff);
      if (!f.is_zero()) return f;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Leibniz expansion over all permutations; fine up to dimension 7 or so.
template <class T>
T leibniz_det(const Matrix<T>& m, const T& one, const T& zero) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline BigInt leibniz_det(const IntMatrix& m) {
  return leibniz_det<BigInt>(m, BigInt(1), BigInt(0));
}

inline MultiPoly leibniz_det(const PolyMatrix& m) {
  return leibniz_det<MultiPoly>(m, MultiPoly(m.nvars(), 1),
                                MultiPoly(m.nvars()));
}

// x_{var+1} in nvars variables, as a short alias for test expressions.
inline MultiPoly X(int nvars, int var) { return MultiPoly::variable(nvars, var); }
inline MultiPoly C(int nvars, long c) { return MultiPoly(nvars, c); }

}  // namespace compdet::testing

#endif  // COMPDET_TESTS_SUPPORT_H_
