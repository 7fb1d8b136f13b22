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

#ifndef COMPDET_POLY_H_
#define COMPDET_POLY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "compdet/numeric.h"

namespace compdet {

// Exponent vector packed into one 128-bit key: the top 16-bit field holds
// the total degree, followed by one field per variable with x1 in the most
// significant position. Integer comparison of keys is therefore graded
// lexicographic order with x1 > x2 > ...
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr std::uint32_t kMaxDegree = 0xFFFF;

  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(int var, std::uint32_t exponent = 1);

  std::uint32_t exponent(int var) const;
  std::uint32_t degree() const;
  std::vector<std::uint32_t> exponents(int nvars) const;

  // True iff every exponent of *this is <= the matching one in `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  Monomial with_exponent(int var, std::uint32_t exponent) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    if (a.key_ == b.key_) return std::strong_ordering::equal;
    return a.key_ < b.key_ ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }

  std::size_t hash() const {
    const auto lo = static_cast<std::uint64_t>(key_);
    const auto hi = static_cast<std::uint64_t>(key_ >> 64);
    return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ull ^ hi);
  }

 private:
  using Key = unsigned __int128;
  static constexpr int kFieldBits = 16;
  static constexpr int kDegreeShift = kFieldBits * kMaxVars;
  static constexpr Key kFieldMask = 0xFFFF;

  static int shift(int var) { return kFieldBits * (kMaxVars - 1 - var); }
  explicit Monomial(Key key) : key_(key) {}

  Key key_ = 0;
};

struct Term {
  Monomial monomial;
  BigInt coeff;
};

// Sparse polynomial in x1..x_nvars with integer coefficients. Terms are kept
// sorted by decreasing monomial with no zero coefficients, so structural
// equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars);
  MultiPoly(int nvars, const BigInt& constant);

  static MultiPoly variable(int nvars, int var);
  // x_{var+1} + shift, the shape of every matrix-entry base.
  static MultiPoly linear(int nvars, int var, const BigInt& shift);
  // Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial; throws std::domain_error otherwise.
  BigInt constant_value() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(int var) const;

  // Re-embeds into `nvars` >= the used variables (zero-extends / truncates
  // unused trailing variables).
  MultiPoly with_nvars(int nvars) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const BigInt& scalar);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& s) { return a *= s; }
  friend MultiPoly operator*(const BigInt& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;

  friend MultiPoly multiply_by_term(const MultiPoly& f, const Term& t);
  friend std::optional<MultiPoly> try_exact_div(const MultiPoly& f,
                                                const MultiPoly& g);
};

// Total order used to sort factor bases: decreasing monomials first, then
// increasing coefficients, shorter prefix first.
bool canonical_less(const MultiPoly& a, const MultiPoly& b);

// f^e with f^0 = 1 (including 0^0 = 1).
MultiPoly pow(const MultiPoly& f, unsigned long e);

BigInt evaluate(const MultiPoly& f, std::span<const BigInt> point);

// Quotient q with f = q * g, or nullopt when g does not divide f.
std::optional<MultiPoly> try_exact_div(const MultiPoly& f, const MultiPoly& g);
// As above but throws NotDivisible.
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);

// Replaces every variable x_j by images[j]; all images share one nvars.
MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images,
                     int nvars_out);

// f(x1 + c, ..., xv + c).
MultiPoly shift_all_vars(const MultiPoly& f, const BigInt& c);

// Greatest common divisor up to sign, normalised to a positive leading
// coefficient. Only used to keep rational functions reduced.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

}  // namespace compdet

#endif  // COMPDET_POLY_H_
