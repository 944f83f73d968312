// Copyright 2026 The wres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "wres/error.hpp"
#include "wres/number.hpp"

namespace wres {
namespace {

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("6/3")), "2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Gaussian, ImaginaryUnitSquaresToMinusOne) {
  EXPECT_EQ(Gaussian::i() * Gaussian::i(), Gaussian(-1));
  Gaussian z(Rational(1, 2), Rational(3));
  EXPECT_EQ(z / z, Gaussian(1));
  EXPECT_FALSE(z.is_real());
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  Polynomial m = Polynomial::m();
  Polynomial p = m * m - Polynomial(Gaussian(1));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate(Gaussian(3)), Gaussian(8));
  EXPECT_TRUE(p.divide_by_linear(1));  // (m-1)(m+1) / (m+1)
  EXPECT_EQ(p, m - Polynomial(Gaussian(1)));
  EXPECT_FALSE(p.divide_by_linear(5));
  EXPECT_EQ(p.to_string(), "m - 1");
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Affine, PrintsExponentForm) {
  EXPECT_EQ((Affine{-2, -2}).to_string(), "-2m-2");
  EXPECT_EQ((Affine{-2, 0}).to_string(), "-2m");
  EXPECT_EQ((Affine{1, 3}).to_string(), "m+3");
  EXPECT_EQ((Affine{0, -4}).to_string(), "-4");
  EXPECT_EQ((Affine{-2, 1} + Affine{0, -1}), (Affine{-2, 0}));
}

TEST(Coeff, RationalFunctionsStayReduced) {
  Coeff c = Coeff::m() * (Coeff::m() + Coeff(1));
  c.divide_by_linear(1);
  EXPECT_TRUE(c.is_polynomial());
  EXPECT_EQ(c, Coeff::m());

  Coeff d = Coeff(1);
  d.divide_by_linear(0).divide_by_linear(1);
  EXPECT_FALSE(d.is_polynomial());
  EXPECT_EQ(d.evaluate(Rational(2)), Gaussian(Rational(1, 6)));
  Coeff back = d * Coeff::m() * (Coeff::m() + Coeff(1));
  EXPECT_EQ(back, Coeff(1));
  EXPECT_EQ(Coeff::dimension().evaluate(Rational(3)), Gaussian(6));
}

TEST(Coeff, SumsOverCommonDenominators) {
  Coeff a(1);
  a.divide_by_linear(0);  // 1/m
  Coeff b(1);
  b.divide_by_linear(1);  // 1/(m+1)
  Coeff sum = a - b;      // 1/(m(m+1))
  EXPECT_EQ(sum.evaluate(Rational(1)), Gaussian(Rational(1, 2)));
  EXPECT_TRUE((a - a).is_zero());
}

}  // namespace
}  // namespace wres
