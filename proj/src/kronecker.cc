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

#include "compdet/kronecker.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "compdet/errors.h"

namespace compdet {

KroneckerPacking::KroneckerPacking(std::vector<std::uint32_t> bounds,
                                   std::size_t coeff_bits)
    : bounds_(std::move(bounds)) {
  strides_.reserve(bounds_.size());
  for (std::uint32_t bound : bounds_) {
    if (bound == 0) throw std::invalid_argument("exponent bound must be >= 1");
    strides_.push_back(slots_);
    slots_ *= bound;
  }
  // One extra bit for the sign of the balanced digits.
  slot_limbs_ = (coeff_bits + 1 + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  slot_limbs_ = std::max<std::size_t>(slot_limbs_, 1);
}

BigInt KroneckerPacking::pack(const MultiPoly& f) const {
  if (f.is_zero()) return 0;
  const std::size_t width = slot_limbs_;
  std::size_t max_offset = 0;
  std::size_t max_coeff = 0;
  bool any_negative = false;
  std::vector<std::size_t> offsets;
  offsets.reserve(f.size());
  for (const Term& t : f.terms()) {
    std::size_t index = 0;
    for (std::size_t v = 0; v < strides_.size(); ++v) {
      index += t.monomial.exponent(static_cast<int>(v)) * strides_[v];
    }
    offsets.push_back(index * width);
    max_offset = std::max(max_offset, offsets.back());
    max_coeff = std::max(max_coeff, mpz_size(t.coeff.get_mpz_t()));
    any_negative = any_negative || sgn(t.coeff) < 0;
  }
  // Room for the largest coefficient plus carries from colliding slots.
  const std::size_t limbs = max_offset + max_coeff + 2;

  BigInt pos;
  BigInt neg;
  mp_limb_t* pos_limbs = mpz_limbs_write(pos.get_mpz_t(), limbs);
  std::fill_n(pos_limbs, limbs, mp_limb_t{0});
  mp_limb_t* neg_limbs = nullptr;
  if (any_negative) {
    neg_limbs = mpz_limbs_write(neg.get_mpz_t(), limbs);
    std::fill_n(neg_limbs, limbs, mp_limb_t{0});
  }
  for (std::size_t k = 0; k < f.size(); ++k) {
    const mpz_srcptr c = f.terms()[k].coeff.get_mpz_t();
    mp_limb_t* dst = (mpz_sgn(c) < 0 ? neg_limbs : pos_limbs) + offsets[k];
    const std::size_t n = mpz_size(c);
    const mp_limb_t carry = mpn_add_n(dst, dst, mpz_limbs_read(c),
                                      static_cast<mp_size_t>(n));
    if (carry) {
      mpn_add_1(dst + n, dst + n,
                static_cast<mp_size_t>(limbs - offsets[k] - n), carry);
    }
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(limbs));
  if (any_negative) {
    mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(limbs));
    pos -= neg;
  }
  return pos;
}

std::optional<MultiPoly> KroneckerPacking::unpack(const BigInt& value,
                                                  int nvars) const {
  if (sgn(value) == 0) return MultiPoly(nvars);
  const mpz_srcptr z = value.get_mpz_t();
  const bool negative = mpz_sgn(z) < 0;
  const std::size_t size = mpz_size(z);
  const mp_limb_t* limbs = mpz_limbs_read(z);
  const std::size_t width = slot_limbs_;
  if (size > slots_ * width) return std::nullopt;

  std::vector<mp_limb_t> digit(width);
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(nvars), 0);
  std::vector<Term> terms;
  mp_limb_t carry = 0;
  for (std::size_t s = 0; s < slots_; ++s) {
    const std::size_t base = s * width;
    if (base >= size && carry == 0) break;
    for (std::size_t l = 0; l < width; ++l) {
      digit[l] = base + l < size ? limbs[base + l] : 0;
    }
    if (carry &&
        mpn_add_1(digit.data(), digit.data(), static_cast<mp_size_t>(width), 1)) {
      continue;  // the digit wrapped to zero; the carry moves on
    }
    carry = 0;
    if (mpn_zero_p(digit.data(), static_cast<mp_size_t>(width))) continue;
    const bool high = (digit[width - 1] >> (GMP_NUMB_BITS - 1)) != 0;
    if (high) {
      mpn_neg(digit.data(), digit.data(), static_cast<mp_size_t>(width));
      carry = 1;
    }
    BigInt coeff;
    mp_limb_t* out = mpz_limbs_write(coeff.get_mpz_t(),
                                     static_cast<mp_size_t>(width));
    std::copy(digit.begin(), digit.end(), out);
    mpz_limbs_finish(coeff.get_mpz_t(), static_cast<mp_size_t>(width));
    if (high != negative) coeff = -coeff;
    for (std::size_t v = 0; v < bounds_.size(); ++v) {
      exps[v] = static_cast<std::uint32_t>((s / strides_[v]) % bounds_[v]);
    }
    terms.push_back({Monomial(exps), std::move(coeff)});
  }
  if (carry) return std::nullopt;
  return MultiPoly::from_terms(nvars, std::move(terms));
}

MultiPoly packed_cross_quotient(const KroneckerPacking& packing,
                                const BigInt& a, const BigInt& b,
                                const BigInt& c, const BigInt& d,
                                const BigInt& p, int nvars) {
  BigInt v;
  mpz_mul(v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_submul(v.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  BigInt q;
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  if (sgn(r) != 0) throw NotDivisible("packed quotient leaves a remainder");
  auto out = packing.unpack(q, nvars);
  if (!out) throw NotDivisible("packed quotient does not fit its bounds");
  return *std::move(out);
}

}  // namespace compdet
