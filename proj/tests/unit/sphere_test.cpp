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

#include <algorithm>
#include <functional>

#include "oracle.hpp"
#include "wres/error.hpp"
#include "wres/sphere.hpp"

namespace wres::sphere {
namespace {

using tensor::Factor;
using tensor::TensorSum;
using tensor::TensorTerm;

constexpr Index L(int k) { return Index::label(k); }

TensorSum minus(TensorSum a, const TensorSum& b) {
  for (TensorTerm t : b) {
    t.coeff = -t.coeff;
    a.push_back(std::move(t));
  }
  return tensor::simplify(a);
}

TEST(IntegrateMonomial, TwoSlots) {
  std::vector<Index> slots{L(1), L(2)};
  TensorSum got = integrate_monomial(slots);
  Coeff one_over_n(1);
  one_over_n /= Gaussian(2);
  one_over_n.divide_by_linear(0);
  TensorSum expected{TensorTerm(one_over_n, {Factor::delta(L(1), L(2)), Factor::vol()})};
  EXPECT_TRUE(minus(got, expected).empty());
}

TEST(IntegrateMonomial, FourSlotsHaveThreePairings) {
  std::vector<Index> slots{L(1), L(2), L(3), L(4)};
  TensorSum got = integrate_monomial(slots);
  EXPECT_EQ(got.size(), 3u);
  for (const TensorTerm& t : got) EXPECT_EQ(t.coeff.evaluate(Rational(2)), Gaussian(Rational(1, 24)));
}

TEST(IntegrateMonomial, OddAndEmpty) {
  std::vector<Index> odd{Index::concrete(1), Index::concrete(1), Index::concrete(1)};
  EXPECT_TRUE(integrate_monomial(odd).empty());
  TensorSum empty = integrate_monomial({});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].coeff, Coeff(1));
  EXPECT_EQ(empty[0].factors, (std::vector<Factor>{Factor::vol()}));
}

TEST(IntegrateExponents, ExamplesAgainstGammaValues) {
  std::vector<int> x1sq{2, 0, 0, 0};
  std::vector<int> x1four{4, 0, 0, 0};
  std::vector<int> odd{1, 1, 0, 0};
  EXPECT_EQ(integrate_exponents(x1sq, 4), Rational(1, 4));
  EXPECT_EQ(integrate_exponents(x1four, 4), Rational(1, 8));
  EXPECT_EQ(integrate_exponents(odd, 4), Rational(0));
  EXPECT_THROW(integrate_exponents(x1sq, 3), DomainError);
}

TEST(VolSphere, ClosedForm) {
  EXPECT_EQ(vol_sphere(2).coefficient, Rational(2));
  EXPECT_EQ(vol_sphere(2).pi_power, 2);
  EXPECT_EQ(vol_sphere(2).to_string(), "2*pi^2");
  EXPECT_EQ(vol_sphere(3).to_string(), "pi^3");
  EXPECT_EQ(vol_sphere(4).to_string(), "pi^4/3");
  EXPECT_EQ(vol_sphere_for_dimension(6).coefficient, Rational(1));
  EXPECT_THROW(vol_sphere(1), DomainError);
  EXPECT_THROW(vol_sphere_for_dimension(5), DomainError);
}

// Every multiset of coordinates of size <= 8 in n variables.
void for_each_monomial(int n, int max_degree, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      fn(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(var)] = k;
      rec(var + 1, left - k);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, max_degree);
}

TEST(SphereOracle, PairingFormulaMatchesGammaFormula) {
  int checked = 0;
  for (int n : {4, 6, 8}) {
    for_each_monomial(n, 8, [&](const std::vector<int>& e) {
      ASSERT_EQ(integrate_exponents(e, n), oracle::sphere_integral_exact(e, n)) << "n=" << n;
      ++checked;
    });
  }
  EXPECT_GT(checked, 12000);
}

TEST(SphereProperty, PermutationInvariance) {
  std::vector<Index> slots{Index::concrete(1), Index::concrete(2), Index::concrete(1), Index::concrete(2),
                           Index::concrete(3), Index::concrete(3)};
  auto value = [](const std::vector<Index>& s) {
    Rational total;
    for (TensorTerm t : integrate_monomial(s)) {
      if (tensor::contract_deltas(t, nullptr)) total += t.coeff.evaluate(Rational(3)).re();
    }
    return total;
  };
  const Rational base = value(slots);
  EXPECT_EQ(base, oracle::sphere_integral_exact(std::vector<int>{2, 2, 2, 0, 0, 0}, 6));
  std::sort(slots.begin(), slots.end());
  do {
    ASSERT_EQ(value(slots), base);
  } while (std::next_permutation(slots.begin(), slots.end()));
}

TEST(SphereProperty, RecursionWithPrefactor) {
  // I^{g1..g_{2k+2}} = 1/(2k+n) [d^{g1g2} I^{g3..} + ... + d^{g1 g_{2k+2}} I^{g2..}]
  for (int k = 0; k < 3; ++k) {
    std::vector<Index> slots;
    for (int j = 1; j <= 2 * k + 2; ++j) slots.push_back(L(j));
    TensorSum lhs = integrate_monomial(slots);
    TensorSum rhs;
    for (std::size_t j = 1; j < slots.size(); ++j) {
      std::vector<Index> rest;
      for (std::size_t r = 1; r < slots.size(); ++r) {
        if (r != j) rest.push_back(slots[r]);
      }
      for (TensorTerm t : integrate_monomial(rest)) {
        t.factors.push_back(Factor::delta(slots[0], slots[j]));
        t.coeff /= Gaussian(2);
        t.coeff.divide_by_linear(k);  // 1/(2k + 2m)
        rhs.push_back(std::move(t));
      }
    }
    EXPECT_TRUE(minus(lhs, rhs).empty()) << "k=" << k;
  }
}

}  // namespace
}  // namespace wres::sphere
