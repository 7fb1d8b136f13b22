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

#ifndef COMPDET_COMB_H_
#define COMPDET_COMB_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <unordered_map>
#include <vector>

namespace compdet {

// A p-tuple of nonnegative integers; n is the sum of the parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t k) const { return parts_[k]; }
  std::size_t size() const { return parts_.size(); }
  int sum() const { return sum_; }
  bool is_proper() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

struct CompositionHash {
  std::size_t operator()(const Composition& c) const;
};

// Ordered, duplicate-free list of compositions with O(1) reverse lookup.
class CompositionList {
 public:
  CompositionList() = default;
  explicit CompositionList(std::vector<Composition> items);

  const std::vector<Composition>& items() const { return items_; }
  const Composition& operator[](std::size_t k) const { return items_[k]; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const Composition& c) const { return index_.count(c) != 0; }
  // Throws NotFound when c is absent.
  std::size_t index_of(const Composition& c) const;

 private:
  std::vector<Composition> items_;
  std::unordered_map<Composition, std::size_t, CompositionHash> index_;
};

// All weak p-compositions of n in display order: grouped by the last part
// ascending, each group ordered recursively on the first p-1 parts, i.e.
// ascending lexicographic order of the reversed tuples. (5,3) starts
// (5,0,0), (4,1,0), (3,2,0), ... and ends (0,0,5).
CompositionList enumerate_weak(int n, int p);

// Compositions with every part >= 1, in the order obtained by shifting
// enumerate_weak(n - p, p) up by one. Empty when p > n.
CompositionList enumerate_proper(int n, int p);

enum class ShiftDirection { kProperToWeak, kWeakToProper };

// Subtracts (kProperToWeak) or adds (kWeakToProper) one in every coordinate.
Composition shift_bijection(const Composition& c, ShiftDirection direction);

inline std::size_t index_of(const CompositionList& list,
                            const Composition& c) {
  return list.index_of(c);
}

}  // namespace compdet

#endif  // COMPDET_COMB_H_
