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

#include "compdet/rational.h"

#include <stdexcept>
#include <utility>

namespace compdet {

RationalFn::RationalFn(MultiPoly num)
    : num_(std::move(num)), den_(num_.nvars(), 1) {}

RationalFn::RationalFn(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.nvars() != den_.nvars()) {
    throw std::invalid_argument("numerator/denominator variable mismatch");
  }
}

RationalFn RationalFn::reduced() const {
  if (num_.is_zero()) return RationalFn(num_, MultiPoly(nvars(), 1));
  const MultiPoly g = gcd(num_, den_);
  MultiPoly num = exact_div(num_, g);
  MultiPoly den = exact_div(den_, g);
  if (sgn(den.leading().coeff) < 0) {
    num = -num;
    den = -den;
  }
  return RationalFn(std::move(num), std::move(den));
}

RationalFn& RationalFn::operator+=(const RationalFn& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  *this = reduced();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& other) {
  return *this += -other;
}

RationalFn& RationalFn::operator*=(const RationalFn& other) {
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  *this = reduced();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& other) {
  if (other.is_zero()) throw std::domain_error("division by zero function");
  num_ = num_ * other.den_;
  den_ = den_ * other.num_;
  *this = reduced();
  return *this;
}

bool ratfn_equal(const RationalFn& f, const RationalFn& g) {
  return f.num() * g.den() == g.num() * f.den();
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return ratfn_equal(a, b);
}

RationalFn pow(const RationalFn& f, long e) {
  if (e >= 0) {
    return RationalFn(pow(f.num(), static_cast<unsigned long>(e)),
                      pow(f.den(), static_cast<unsigned long>(e)));
  }
  if (f.is_zero()) throw std::domain_error("negative power of zero");
  return RationalFn(pow(f.den(), static_cast<unsigned long>(-e)),
                    pow(f.num(), static_cast<unsigned long>(-e)))
      .reduced();
}

RationalFn substitute(const RationalFn& f, std::span<const MultiPoly> images,
                      int nvars_out) {
  MultiPoly den = substitute(f.den(), images, nvars_out);
  if (den.is_zero()) {
    throw std::domain_error("denominator vanishes under substitution");
  }
  return RationalFn(substitute(f.num(), images, nvars_out), std::move(den))
      .reduced();
}

}  // namespace compdet
