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

#ifndef COMPDET_MATRIX_H_
#define COMPDET_MATRIX_H_

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "compdet/comb.h"
#include "compdet/numeric.h"
#include "compdet/poly.h"

namespace compdet {

// Dense square matrix, row-major. When the rows and columns are indexed by
// compositions, the same list labels both axes.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim, const T& fill = T())
      : dim_(dim), data_(dim * dim, fill) {}

  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * dim_, dim_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < dim_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  const std::shared_ptr<const CompositionList>& labels() const {
    return labels_;
  }
  void set_labels(std::shared_ptr<const CompositionList> labels) {
    labels_ = std::move(labels);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
  std::shared_ptr<const CompositionList> labels_;
};

using IntMatrix = Matrix<BigInt>;

class PolyMatrix : public Matrix<MultiPoly> {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t dim, int nvars)
      : Matrix<MultiPoly>(dim, MultiPoly(nvars)), nvars_(nvars) {}

  int nvars() const { return nvars_; }

 private:
  int nvars_ = 0;
};

}  // namespace compdet

#endif  // COMPDET_MATRIX_H_
