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

#include "compdet/det.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "compdet/errors.h"
#include "compdet/kronecker.h"

namespace compdet {
namespace {

bool is_zero(const BigInt& v) { return sgn(v) == 0; }
bool is_zero(const MultiPoly& v) { return v.is_zero(); }

std::size_t term_count(const BigInt&) { return 1; }
std::size_t term_count(const MultiPoly& v) { return v.size(); }

void divide_exact(BigInt& v, const BigInt& d) {
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}
void divide_exact(MultiPoly& v, const MultiPoly& d) { v = exact_div(v, d); }

template <class T>
T cofactor(const Matrix<T>& a, const T& one, const T& zero) {
  const std::size_t n = a.dim();
  if (n > kCofactorMaxDim) {
    throw DimensionTooLarge("cofactor expansion limited to dimension " +
                            std::to_string(kCofactorMaxDim) + ", got " +
                            std::to_string(n));
  }
  if (n == 0) return one;
  // memo[mask]: determinant of the minor on the last popcount(mask) rows and
  // the columns in mask.
  std::vector<std::optional<T>> memo(std::size_t{1} << n);
  auto det = [&](auto&& self, std::uint32_t mask) -> const T& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    if (mask == 0) return slot.emplace(one);
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    T acc = zero;
    bool negative = false;
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (!(mask & bit)) continue;
      if (!is_zero(a(row, c))) {
        T term = a(row, c) * self(self, mask & ~bit);
        if (negative) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      negative = !negative;
    }
    return slot.emplace(std::move(acc));
  };
  return det(det, (std::uint32_t{1} << n) - 1);
}

// Per-step state for the packed polynomial update.
struct PackedStep {
  std::optional<KroneckerPacking> packing;
  BigInt pivot;
  BigInt prev;
  std::vector<BigInt> column;  // a(i, k) for i > k
  std::vector<BigInt> row;     // a(k, j) for j > k
};

std::size_t bit_length(const BigInt& v) {
  return sgn(v) == 0 ? 1 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

BigInt l1_norm(const MultiPoly& f) {
  BigInt total = 0;
  for (const Term& t : f.terms()) total += abs(t.coeff);
  return total;
}

// Chooses a packing for step k when dense products are expected to beat the
// sparse kernel. The entry produced at (i, j) is the minor of the original
// matrix on rows 0..k, i, so its coefficients are bounded by
// prod_{r <= k} R_r * R_i with R_r the l1 row norms.
void plan_packed_step(const Matrix<MultiPoly>& a, std::size_t k,
                      const MultiPoly& prev, const BigInt& pivot_rows_norm,
                      const std::vector<BigInt>& row_norms, PackedStep& step) {
  step.packing.reset();
  const std::size_t n = a.dim();
  const int nvars = prev.nvars();
  if (nvars == 0) return;
  std::size_t max_terms = std::max(a(k, k).size(), prev.size());
  std::vector<std::uint32_t> inner(nvars, 0);
  std::vector<std::uint32_t> col_deg(nvars, 0);
  std::vector<std::uint32_t> row_deg(nvars, 0);
  BigInt max_row_norm = 0;
  for (std::size_t i = k + 1; i < n; ++i) {
    max_row_norm = std::max(max_row_norm, row_norms[i]);
    for (int v = 0; v < nvars; ++v) {
      col_deg[v] = std::max(col_deg[v], a(i, k).degree_in(v));
      row_deg[v] = std::max(row_deg[v], a(k, i).degree_in(v));
    }
    max_terms = std::max({max_terms, a(i, k).size(), a(k, i).size()});
    for (std::size_t j = k + 1; j < n; ++j) {
      max_terms = std::max(max_terms, a(i, j).size());
      for (int v = 0; v < nvars; ++v) {
        inner[v] = std::max(inner[v], a(i, j).degree_in(v));
      }
    }
  }
  std::vector<std::uint32_t> bounds(nvars);
  for (int v = 0; v < nvars; ++v) {
    const std::int64_t top =
        std::max<std::int64_t>(a(k, k).degree_in(v) + inner[v],
                               col_deg[v] + row_deg[v]);
    bounds[v] = static_cast<std::uint32_t>(
        std::max<std::int64_t>(top - prev.degree_in(v), 0) + 1);
  }
  const std::size_t bits = bit_length(pivot_rows_norm * max_row_norm) + 1;
  KroneckerPacking packing(std::move(bounds), bits);
  // A dense product costs about slots * limbs (times a log factor); the
  // sparse kernel about max_terms^2 coefficient operations.
  const double dense = static_cast<double>(packing.slots()) *
                       static_cast<double>(packing.slot_limbs()) * 4.0;
  const double sparse = static_cast<double>(max_terms) * max_terms;
  if (dense >= sparse) return;
  step.pivot = packing.pack(a(k, k));
  step.prev = packing.pack(prev);
  step.column.clear();
  step.row.clear();
  for (std::size_t i = k + 1; i < n; ++i) {
    step.column.push_back(packing.pack(a(i, k)));
    step.row.push_back(packing.pack(a(k, i)));
  }
  step.packing.emplace(std::move(packing));
}

template <class T>
T bareiss(Matrix<T> a, const T& one, const T& zero, bool parallel,
          BareissStats* stats) {
  const std::size_t n = a.dim();
  if (n == 0) return one;
  constexpr bool kPoly = std::is_same_v<T, MultiPoly>;
  std::size_t peak = 0;
  auto note_peak = [&](std::size_t from) {
    if (!stats) return;
    for (std::size_t i = from; i < n; ++i) {
      for (std::size_t j = from; j < n; ++j) {
        peak = std::max(peak, term_count(a(i, j)));
      }
    }
  };
  note_peak(0);

  std::vector<BigInt> row_norms;
  BigInt pivot_rows_norm = 1;
  PackedStep step;
  if constexpr (kPoly) {
    for (std::size_t i = 0; i < n; ++i) {
      BigInt norm = 0;
      for (std::size_t j = 0; j < n; ++j) norm += l1_norm(a(i, j));
      row_norms.push_back(std::move(norm));
    }
  }

  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a(r, k))) ++r;
      if (r == n) {
        if (stats) stats->peak_terms = peak;
        return zero;
      }
      a.swap_rows(k, r);
      if constexpr (kPoly) std::swap(row_norms[k], row_norms[r]);
      negate = !negate;
    }
    if constexpr (kPoly) {
      pivot_rows_norm *= row_norms[k];
      plan_packed_step(a, k, prev, pivot_rows_norm, row_norms, step);
    }
    const std::size_t m = n - k - 1;
    const long cells = static_cast<long>(m * m);
    // Each (i, j) with i, j > k reads only row k and column k, which this
    // step leaves untouched, so the updates are independent.
    auto update = [&](long idx) {
      const std::size_t i = k + 1 + static_cast<std::size_t>(idx) / m;
      const std::size_t j = k + 1 + static_cast<std::size_t>(idx) % m;
      if constexpr (kPoly) {
        if (step.packing) {
          a(i, j) = packed_cross_quotient(
              *step.packing, step.pivot, step.packing->pack(a(i, j)),
              step.column[i - k - 1], step.row[j - k - 1], step.prev,
              a(i, j).nvars());
          return;
        }
      }
      T v = a(k, k) * a(i, j);
      v -= a(i, k) * a(k, j);
      divide_exact(v, prev);
      a(i, j) = std::move(v);
    };
    if (parallel) {
      // Exceptions may not leave an OpenMP region; keep the first one.
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
      for (long idx = 0; idx < cells; ++idx) {
        try {
          update(idx);
        } catch (...) {
#pragma omp critical(compdet_bareiss_failure)
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    } else {
      for (long idx = 0; idx < cells; ++idx) update(idx);
    }
    note_peak(k + 1);
    prev = a(k, k);
  }
  if (stats) stats->peak_terms = peak;
  T result = std::move(a(n - 1, n - 1));
  if (negate) result = -result;
  return result;
}

}  // namespace

BigInt det_cofactor(const IntMatrix& m) {
  return cofactor(m, BigInt(1), BigInt(0));
}

MultiPoly det_cofactor(const PolyMatrix& m) {
  return cofactor<MultiPoly>(m, MultiPoly(m.nvars(), 1), MultiPoly(m.nvars()));
}

BigInt det_bareiss(const IntMatrix& m, BareissStats* stats) {
  return bareiss(m, BigInt(1), BigInt(0), /*parallel=*/true, stats);
}

MultiPoly det_bareiss(const PolyMatrix& m, BareissStats* stats) {
  return bareiss<MultiPoly>(m, MultiPoly(m.nvars(), 1), MultiPoly(m.nvars()),
                            /*parallel=*/true, stats);
}

BigInt det_bareiss_serial(const IntMatrix& m, BareissStats* stats) {
  return bareiss(m, BigInt(1), BigInt(0), /*parallel=*/false, stats);
}

MultiPoly det_bareiss_serial(const PolyMatrix& m, BareissStats* stats) {
  return bareiss<MultiPoly>(m, MultiPoly(m.nvars(), 1), MultiPoly(m.nvars()),
                            /*parallel=*/false, stats);
}

PolyMatrix leading_block(const PolyMatrix& m, std::size_t k) {
  k = std::min(k, m.dim());
  PolyMatrix out(k, m.nvars());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) out(r, c) = m(r, c);
  }
  return out;
}

}  // namespace compdet
