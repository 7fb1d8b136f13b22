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

#include "compdet/factored.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace compdet {
namespace {

bool factor_less(const Factor& a, const Factor& b) {
  const bool a_int = a.base.is_constant();
  const bool b_int = b.base.is_constant();
  if (a_int != b_int) return a_int;
  if (a_int) return a.base.constant_value() < b.base.constant_value();
  return canonical_less(a.base, b.base);
}

}  // namespace

FactoredForm::FactoredForm(int nvars) : nvars_(nvars) {}

FactoredForm::FactoredForm(int nvars, const BigInt& constant)
    : nvars_(nvars) {
  multiply_integer(constant);
}

void FactoredForm::multiply_integer(const BigInt& base,
                                    const BigInt& exponent) {
  multiply(MultiPoly(nvars_, base), exponent);
}

void FactoredForm::multiply(const MultiPoly& base, const BigInt& exponent) {
  if (sgn(exponent) < 0) {
    throw std::invalid_argument("factored form exponents must be >= 0");
  }
  if (base.nvars() != nvars_) {
    throw std::invalid_argument("factor base variable-count mismatch");
  }
  if (sgn(exponent) == 0 || is_zero()) return;

  MultiPoly stored = base;
  if (base.is_constant()) {
    BigInt value = base.constant_value();
    if (sgn(value) == 0) {
      constant_ = 0;
      factors_.clear();
      return;
    }
    if (sgn(value) < 0) {
      value = -value;
      if (mpz_odd_p(exponent.get_mpz_t())) constant_ = -constant_;
    }
    if (value == 1) return;
    stored = MultiPoly(nvars_, value);
  } else if (base.total_degree() != 1) {
    throw std::invalid_argument(
        "factor bases must be integers or linear polynomials");
  }

  Factor f{std::move(stored), exponent};
  auto it = std::lower_bound(factors_.begin(), factors_.end(), f, factor_less);
  if (it != factors_.end() && it->base == f.base) {
    it->exponent += exponent;
  } else {
    factors_.insert(it, std::move(f));
  }
}

FactoredForm& FactoredForm::operator*=(const FactoredForm& other) {
  if (other.nvars_ != nvars_) {
    throw std::invalid_argument("factored form variable-count mismatch");
  }
  if (other.is_zero()) {
    constant_ = 0;
    factors_.clear();
    return *this;
  }
  constant_ *= other.constant_;
  for (const Factor& f : other.factors_) multiply(f.base, f.exponent);
  return *this;
}

BigInt FactoredForm::exponent_of(const MultiPoly& base) const {
  for (const Factor& f : factors_) {
    if (f.base == base) return f.exponent;
  }
  return 0;
}

bool FactoredForm::is_integer_valued() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.base.is_constant(); });
}

bool operator==(const FactoredForm& a, const FactoredForm& b) {
  if (a.nvars_ != b.nvars_ || a.constant_ != b.constant_ ||
      a.factors_.size() != b.factors_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.factors_.size(); ++k) {
    if (a.factors_[k].base != b.factors_[k].base ||
        a.factors_[k].exponent != b.factors_[k].exponent) {
      return false;
    }
  }
  return true;
}

MultiPoly expand_factored(const FactoredForm& f) {
  MultiPoly out(f.nvars(), f.constant());
  for (const Factor& factor : f.factors()) {
    if (out.is_zero()) break;
    out = out * pow(factor.base, to_ulong_checked(factor.exponent));
  }
  return out;
}

BigInt evaluate(const FactoredForm& f, std::span<const BigInt> point) {
  BigInt out = f.constant();
  BigInt power;
  for (const Factor& factor : f.factors()) {
    const BigInt value = evaluate(factor.base, point);
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(),
               to_ulong_checked(factor.exponent));
    out *= power;
  }
  return out;
}

BigInt to_integer(const FactoredForm& f) {
  if (!f.is_integer_valued()) {
    throw std::domain_error("factored form is not integer-valued");
  }
  return expand_factored(f).constant_value();
}

FactoredForm substitute(const FactoredForm& f,
                        std::span<const MultiPoly> images, int nvars_out) {
  FactoredForm out(nvars_out, f.constant());
  for (const Factor& factor : f.factors()) {
    out.multiply(substitute(factor.base, images, nvars_out), factor.exponent);
  }
  return out;
}

FactoredForm shift_all_vars(const FactoredForm& f, const BigInt& c) {
  FactoredForm out(f.nvars(), f.constant());
  for (const Factor& factor : f.factors()) {
    out.multiply(shift_all_vars(factor.base, c), factor.exponent);
  }
  return out;
}

PrimeSignature prime_signature(const FactoredForm& f) {
  if (!f.is_integer_valued()) {
    throw std::domain_error("prime signature of a non-integer form");
  }
  if (f.is_zero()) throw std::domain_error("prime signature of zero");
  PrimeSignature sig;
  sig.sign = sgn(f.constant());
  for (const Factor& factor : f.factors()) {
    BigInt rest = factor.base.constant_value();
    for (unsigned long p = 2; rest != 1; ++p) {
      if (BigInt(p) * p > rest) {
        if (!rest.fits_ulong_p()) {
          throw std::overflow_error("integer base too large to factor");
        }
        sig.exponents[rest.get_ui()] += factor.exponent;
        break;
      }
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        sig.exponents[p] += factor.exponent;
      }
    }
  }
  return sig;
}

bool equal_as_integers(const FactoredForm& a, const FactoredForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return prime_signature(a) == prime_signature(b);
}

}  // namespace compdet
