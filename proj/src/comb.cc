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

#include "compdet/comb.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "compdet/errors.h"

namespace compdet {
namespace {

std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(c[k]);
  }
  return out + ")";
}

// Appends every weak composition of n into `length` parts, with the trailing
// coordinates already fixed in `suffix` (stored reversed).
void enumerate_into(int n, int length, std::vector<int>& suffix,
                    std::vector<Composition>& out) {
  if (length == 1) {
    std::vector<int> parts{n};
    parts.insert(parts.end(), suffix.rbegin(), suffix.rend());
    out.emplace_back(std::move(parts));
    return;
  }
  for (int last = 0; last <= n; ++last) {
    suffix.push_back(last);
    enumerate_into(n - last, length - 1, suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 0) throw std::invalid_argument("negative composition part");
    sum_ += part;
  }
}

bool Composition::is_proper() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](int part) { return part >= 1; });
}

std::size_t CompositionHash::operator()(const Composition& c) const {
  std::size_t h = c.size();
  for (int part : c.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9E3779B97F4A7C15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

CompositionList::CompositionList(std::vector<Composition> items)
    : items_(std::move(items)) {
  index_.reserve(items_.size());
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (!index_.emplace(items_[k], k).second) {
      throw std::invalid_argument("duplicate composition " +
                                  to_string(items_[k]));
    }
  }
}

std::size_t CompositionList::index_of(const Composition& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) {
    throw NotFound("composition " + to_string(c) + " not in list");
  }
  return it->second;
}

CompositionList enumerate_weak(int n, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Composition> out;
  std::vector<int> suffix;
  enumerate_into(n, p, suffix, out);
  return CompositionList(std::move(out));
}

CompositionList enumerate_proper(int n, int p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p > n) return CompositionList();
  std::vector<Composition> out;
  for (const Composition& c : enumerate_weak(n - p, p)) {
    out.push_back(shift_bijection(c, ShiftDirection::kWeakToProper));
  }
  return CompositionList(std::move(out));
}

Composition shift_bijection(const Composition& c, ShiftDirection direction) {
  std::vector<int> parts = c.parts();
  if (direction == ShiftDirection::kProperToWeak) {
    if (!c.is_proper()) {
      throw std::invalid_argument("composition " + to_string(c) +
                                  " is not proper");
    }
    for (int& part : parts) --part;
  } else {
    for (int& part : parts) ++part;
  }
  return Composition(std::move(parts));
}

}  // namespace compdet
