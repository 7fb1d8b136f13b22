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

#include "compdet/pcmatrix.h"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace compdet {
namespace {

// powers[j][a][b] = (x_{var(j)} + a)^b for a, b in [0, max_part].
class PowerTable {
 public:
  PowerTable(int nvars, int coords, int max_part, bool univariate) {
    table_.resize(static_cast<std::size_t>(coords));
    for (int j = 0; j < coords; ++j) {
      const int var = univariate ? 0 : j;
      auto& by_shift = table_[j];
      by_shift.resize(static_cast<std::size_t>(max_part) + 1);
      for (int a = 0; a <= max_part; ++a) {
        const MultiPoly base = MultiPoly::linear(nvars, var, a);
        auto& row = by_shift[a];
        row.reserve(static_cast<std::size_t>(max_part) + 1);
        row.emplace_back(nvars, 1);
        for (int b = 1; b <= max_part; ++b) row.push_back(row.back() * base);
      }
    }
  }

  const MultiPoly& at(int coord, int shift, int exponent) const {
    return table_[coord][shift][exponent];
  }

 private:
  std::vector<std::vector<std::vector<MultiPoly>>> table_;
};

PolyMatrix build_labelled(std::shared_ptr<const CompositionList> labels,
                          int p, int max_part, bool univariate) {
  const int nvars = univariate ? 1 : p;
  const std::size_t dim = labels->size();
  PolyMatrix m(dim, nvars);
  m.set_labels(labels);
  if (dim == 0) return m;
  const PowerTable powers(nvars, p, max_part, univariate);
  for (std::size_t r = 0; r < dim; ++r) {
    const Composition& alpha = (*labels)[r];
    for (std::size_t c = 0; c < dim; ++c) {
      const Composition& beta = (*labels)[c];
      MultiPoly entry(nvars, 1);
      for (int j = 0; j < p; ++j) {
        if (beta[j] != 0) entry = entry * powers.at(j, alpha[j], beta[j]);
      }
      m(r, c) = std::move(entry);
    }
  }
  return m;
}

}  // namespace

PolyMatrix build_general(int n, int p) {
  auto labels = std::make_shared<const CompositionList>(enumerate_weak(n, p));
  return build_labelled(std::move(labels), p, n, /*univariate=*/false);
}

PolyMatrix build_univariate(int n, int p) {
  auto labels = std::make_shared<const CompositionList>(enumerate_weak(n, p));
  return build_labelled(std::move(labels), p, n, /*univariate=*/true);
}

IntMatrix build_integer(int n, int p) {
  auto labels = std::make_shared<const CompositionList>(enumerate_weak(n, p));
  const std::size_t dim = labels->size();
  IntMatrix m(dim);
  m.set_labels(labels);
  BigInt power;
  for (std::size_t r = 0; r < dim; ++r) {
    const Composition& alpha = (*labels)[r];
    for (std::size_t c = 0; c < dim; ++c) {
      const Composition& beta = (*labels)[c];
      BigInt entry = 1;
      for (int j = 0; j < p; ++j) {
        // mpz_ui_pow_ui gives 0^0 = 1.
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(alpha[j]),
                      static_cast<unsigned long>(beta[j]));
        entry *= power;
      }
      m(r, c) = std::move(entry);
    }
  }
  return m;
}

PolyMatrix build_proper(int n, int p) {
  auto labels = std::make_shared<const CompositionList>(enumerate_proper(n, p));
  return build_labelled(std::move(labels), p, n, /*univariate=*/false);
}

IntMatrix specialize(const PolyMatrix& m, std::span<const BigInt> point) {
  if (point.size() != static_cast<std::size_t>(m.nvars())) {
    throw std::invalid_argument("specialize: point has length " +
                                std::to_string(point.size()) + ", expected " +
                                std::to_string(m.nvars()));
  }
  IntMatrix out(m.dim());
  out.set_labels(m.labels());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      out(r, c) = evaluate(m(r, c), point);
    }
  }
  return out;
}

}  // namespace compdet
