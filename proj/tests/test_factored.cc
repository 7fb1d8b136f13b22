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

#include <gtest/gtest.h>

#include <vector>

#include "compdet/errors.h"
#include "compdet/factored.h"
#include "compdet/poly_io.h"
#include "support.h"

namespace compdet {
namespace {

using testing::C;
using testing::Gen;
using testing::X;

MultiPoly s2(long c) { return X(2, 0) + X(2, 1) + C(2, c); }

TEST(Factored, ExpandExamples) {
  FactoredForm f(2);
  f.multiply_integer(2);
  f.multiply(s2(2), 3);
  const MultiPoly e = expand_factored(f);
  EXPECT_EQ(e, C(2, 2) * pow(s2(2), 3));
  EXPECT_EQ(e.leading().coeff, 2);
  EXPECT_EQ(evaluate(e, std::vector<BigInt>{0, 0}), 16);

  EXPECT_EQ(expand_factored(FactoredForm(2)), C(2, 1));

  FactoredForm eight(0);
  eight.multiply_integer(2, 3);
  EXPECT_EQ(expand_factored(eight), C(0, 8));
  EXPECT_EQ(to_integer(eight), 8);
}

TEST(Factored, CanonicalConstantAndMerging) {
  FactoredForm f(1, BigInt(-12));
  EXPECT_EQ(f.constant(), -1);
  EXPECT_EQ(f.exponent_of(C(1, 12)), 1);
  f.multiply_integer(12, 2);
  EXPECT_EQ(f.exponent_of(C(1, 12)), 3);
  f.multiply(X(1, 0) + C(1, 1));
  f.multiply(X(1, 0) + C(1, 1), 4);
  EXPECT_EQ(f.exponent_of(X(1, 0) + C(1, 1)), 5);
  f.multiply_integer(1, 9);
  f.multiply(X(1, 0) + C(1, 2), 0);
  EXPECT_EQ(f.factors().size(), 2u);
  EXPECT_FALSE(f.is_integer_valued());
  FactoredForm z(1);
  z.multiply_integer(0);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(expand_factored(z), MultiPoly(1));
}

TEST(Factored, EqualityIsOrderIndependent) {
  FactoredForm a(2);
  a.multiply(X(2, 0) + C(2, 1));
  a.multiply_integer(3, 2);
  a.multiply(s2(3));
  FactoredForm b(2);
  b.multiply(s2(3));
  b.multiply_integer(3);
  b.multiply(X(2, 0) + C(2, 1));
  b.multiply_integer(3);
  EXPECT_EQ(a, b);
}

TEST(Factored, FormatMatchesCliShape) {
  FactoredForm f(2);
  f.multiply_integer(2);
  f.multiply(s2(2), 3);
  EXPECT_EQ(format(f), "2*(x1+x2+2)^3");
  EXPECT_EQ(format(FactoredForm(2)), "1");
  EXPECT_EQ(format(FactoredForm(2, BigInt(-1))), "-1");
}

TEST(Factored, ParseExamples) {
  const FactoredForm f = parse_factored("2*(x1+x2+2)^3");
  FactoredForm expected(2);
  expected.multiply_integer(2);
  expected.multiply(s2(2), 3);
  EXPECT_EQ(f, expected);
  EXPECT_EQ(parse_factored("-3^2*(x1+1)", 1).constant(), -1);
  EXPECT_THROW(parse_factored("(x1*x2)^2"), ParseError);
}

TEST(Factored, EvaluateAndShift) {
  FactoredForm f(2);
  f.multiply_integer(2);
  f.multiply(s2(2), 3);
  EXPECT_EQ(evaluate(f, std::vector<BigInt>{1, -1}), 16);
  EXPECT_EQ(evaluate(f, std::vector<BigInt>{3, 4}), 2 * 729);
  const FactoredForm g = shift_all_vars(f, 1);
  EXPECT_EQ(expand_factored(g), shift_all_vars(expand_factored(f), 1));
}

TEST(Factored, SubstituteMergesCollidingBases) {
  FactoredForm f(2);
  f.multiply(X(2, 0) + C(2, 1), 2);
  f.multiply(X(2, 1) + C(2, 1), 3);
  const std::vector<MultiPoly> images(2, X(1, 0));
  const FactoredForm g = substitute(f, images, 1);
  EXPECT_EQ(g.factors().size(), 1u);
  EXPECT_EQ(g.exponent_of(X(1, 0) + C(1, 1)), 5);
}

TEST(Factored, PrimeSignatureComparesHugeIntegers) {
  FactoredForm a(0);
  a.multiply_integer(12, BigInt("1000000000000"));
  FactoredForm b(0);
  b.multiply_integer(4, BigInt("1000000000000"));
  b.multiply_integer(3, BigInt("1000000000000"));
  EXPECT_TRUE(equal_as_integers(a, b));
  b.multiply_integer(2);
  EXPECT_FALSE(equal_as_integers(a, b));
  EXPECT_EQ(prime_signature(a).exponents.at(2), BigInt("2000000000000"));
}

TEST(FactoredProperty, ExponentAdditivity) {
  Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly base =
        X(2, static_cast<int>(gen.range(0, 1))) + C(2, gen.range(-5, 5));
    const long e1 = gen.range(0, 5);
    const long e2 = gen.range(0, 5);
    FactoredForm joint(2);
    joint.multiply(base, e1 + e2);
    FactoredForm left(2);
    left.multiply(base, e1);
    FactoredForm right(2);
    right.multiply(base, e2);
    ASSERT_EQ(expand_factored(joint),
              expand_factored(left) * expand_factored(right));
    left *= right;
    ASSERT_EQ(left, joint);
  }
}

TEST(FactoredProperty, TextAndJsonRoundTrip) {
  Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    FactoredForm f(3, BigInt(gen.range(0, 1) ? 1 : -1));
    for (int k = 0; k < 4; ++k) {
      f.multiply_integer(gen.range(2, 30), gen.range(0, 40));
      MultiPoly base = X(3, static_cast<int>(gen.range(0, 2))) + C(3, gen.range(-9, 9));
      if (gen.range(0, 1)) base += X(3, 2);
      if (base.is_constant()) continue;
      f.multiply(base, gen.range(0, 6));
    }
    ASSERT_EQ(parse_factored(format(f), 3), f) << format(f);
    ASSERT_EQ(factored_from_json(to_json(f)), f);
  }
}

}  // namespace
}  // namespace compdet
