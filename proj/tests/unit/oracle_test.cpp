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

// Sanity checks on the reference oracles themselves.

#include <gtest/gtest.h>

#include <array>

#include "oracle.hpp"
#include "wres/error.hpp"

namespace oracle {
namespace {

using wres::tensor::Field;

TEST(ExteriorRep, CliffordSquares) {
  const ExteriorRep rep2(2);
  EXPECT_EQ(rep2.dim(), 4u);
  EXPECT_EQ(rep2.c(1) * rep2.c(1), -1 * Matrix::identity(4));
  EXPECT_EQ(rep2.chat(2) * rep2.chat(2), Matrix::identity(4));
  const ExteriorRep rep4(4);
  EXPECT_EQ(Matrix::identity(rep4.dim()).trace(), 16);
  EXPECT_EQ((rep4.c(1) * rep4.chat(1)).trace(), 0);
  EXPECT_EQ(rep4.c(1) * rep4.chat(3) + rep4.chat(3) * rep4.c(1), Matrix(16));
}

TEST(ExteriorRep, RejectsUnsupportedDimensions) {
  EXPECT_THROW(ExteriorRep(3), wres::DomainError);
  EXPECT_THROW(ExteriorRep(10), wres::DomainError);
  EXPECT_THROW(ExteriorRep(0), wres::DomainError);
}

TEST(GammaHalf, Values) {
  EXPECT_EQ(gamma_half(2).q, 1);  // Gamma(1)
  EXPECT_EQ(gamma_half(1).sqrt_pi, 1);
  EXPECT_EQ(gamma_half(1).q, 1);
  EXPECT_EQ(gamma_half(5).q, Rational(3, 4));  // Gamma(5/2) = 3/4 sqrt(pi)
  EXPECT_EQ(gamma_half(8).q, 6);
}

TEST(SphereIntegral, Moments) {
  const std::array<int, 4> x2{2, 0, 0, 0};
  const std::array<int, 4> x4{4, 0, 0, 0};
  const std::array<int, 4> x2y2{2, 2, 0, 0};
  const std::array<int, 4> odd{1, 1, 0, 0};
  EXPECT_EQ(sphere_integral_exact(x2, 4), Rational(1, 4));
  EXPECT_EQ(sphere_integral_exact(x4, 4), Rational(1, 8));
  EXPECT_EQ(sphere_integral_exact(x2y2, 4), Rational(1, 24));
  EXPECT_EQ(sphere_integral_exact(odd, 4), 0);
}

TEST(Instantiation, CurvatureSymmetries) {
  const Instantiation inst = random_tensor_instantiation(7, 4);
  EXPECT_EQ(inst.R(1, 1, 2, 3), 0);
  std::int64_t s = 0;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      std::int64_t ric = 0;
      for (int l = 1; l <= 4; ++l) ric += inst.R(l, a, l, b);
      EXPECT_EQ(inst.Ric(a, b), ric);
      EXPECT_EQ(inst.Ric(a, b), inst.Ric(b, a));
      EXPECT_EQ(inst.R(a, b, 1, 2), inst.R(1, 2, a, b));
      EXPECT_EQ(inst.R(a, b, 3, 4), -inst.R(b, a, 3, 4));
      EXPECT_EQ(inst.R(a, b, 2, 3) + inst.R(a, 2, 3, b) + inst.R(a, 3, b, 2), 0);
    }
    s += inst.Ric(a, a);
  }
  EXPECT_EQ(inst.s(), s);
}

TEST(Instantiation, ScalarInvariantEvaluation) {
  Instantiation inst = random_tensor_instantiation(3, 4);
  inst.set_vec(Field::U, {1, 0, 0, 0});
  inst.set_vec(Field::W, {1, 0, 0, 0});
  inst.set_vec(Field::V, {1, 2, 0, 0});
  wres::tensor::ScalarInvariantExpr e;
  e.add({"|V|^2*g(u,w)", 1, 1}, wres::Coeff(1));
  EXPECT_EQ(evaluate(inst, e), Gaussian(5 * 16));
  wres::tensor::ScalarInvariantExpr r;
  r.add({"Ric(u,w)", 0, 1}, wres::Coeff::m());
  EXPECT_EQ(evaluate(inst, r), Gaussian(2 * inst.Ric(1, 1)));
}

}  // namespace
}  // namespace oracle
