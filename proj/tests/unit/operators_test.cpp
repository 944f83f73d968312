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

#include "oracle.hpp"
#include "transcriptions.hpp"
#include "wres/error.hpp"
#include "wres/operators.hpp"
#include "wres/residue.hpp"

namespace wres::operators {
namespace {

using clifford::CliffordPoly;
using clifford::Family;
using pdo::Component;
using pdo::PDOSymbol;
using tensor::Field;

Component tagged(const Component& c, const std::string& prefix) {
  Component out;
  out.x_exact = c.x_exact;
  for (const auto& t : c.terms) {
    if (t.tag.rfind(prefix, 0) == 0) out.terms.push_back(t);
  }
  return out;
}

TEST(LaplaceData, WittenData) {
  const LaplaceData d = build_laplace_data();
  EXPECT_TRUE(d.T_a.is_zero());
  ASSERT_EQ(d.E.size(), 4u);
  CliffordPoly scalar;
  for (const auto& [tag, p] : d.E) {
    if (tag == "E.scal" || tag == "E.V2") scalar += p;
  }
  tensor::ScalarInvariantExpr e = tensor::collect(tensor::simplify(clifford::trace(scalar)));
  EXPECT_EQ(e.coefficient("s", 1, 0), Coeff(Gaussian(Rational(1, 4))));
  EXPECT_EQ(e.coefficient("|V|^2", 1, 0), Coeff(1));
}

TEST(LaplaceData, WithoutDeformation) {
  const LaplaceData d = build_laplace_data({false});
  for (const auto& [tag, p] : d.E) {
    EXPECT_NE(tag, "E.dV");
    EXPECT_NE(tag, "E.V2");
  }
}

TEST(LaplaceData, TabIsAntisymmetric) {
  const LaplaceData d = build_laplace_data();
  const CliffordPoly tab = d.T_ab_total();
  CliffordPoly tba;
  for (clifford::CliffTerm t : tab.terms()) {
    tensor::relabel(t.coeff, {{LaplaceData::a, LaplaceData::b}, {LaplaceData::b, LaplaceData::a}});
    tba.add(std::move(t));
  }
  EXPECT_TRUE(clifford::equivalent(tab + tba, CliffordPoly()));

  // Numerically at n = 4 with concrete a, b and the generators traced out
  // against their partners.
  const oracle::Instantiation inst = oracle::random_tensor_instantiation(13, 4);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (const auto& t : tab.terms()) {
        EXPECT_EQ(inst.evaluate(t.coeff, {{LaplaceData::a, a}, {LaplaceData::b, b}, {t.word[0].index, 1},
                                          {t.word[1].index, 2}}),
                  -inst.evaluate(t.coeff, {{LaplaceData::a, b}, {LaplaceData::b, a}, {t.word[0].index, 1},
                                           {t.word[1].index, 2}}));
      }
    }
  }
}

TEST(LaplaceData, CurvatureQuadraticTracesToZero) {
  const LaplaceData d = build_laplace_data();
  for (const auto& [tag, p] : d.E) {
    if (tag != "E.curv" && tag != "E.dV") continue;
    EXPECT_TRUE(tensor::collect(tensor::simplify(clifford::trace(p))).is_zero()) << tag;
  }
}

TEST(Parametrix, MatchesTranscribedWittenSymbols) {
  const PDOSymbol q = parametrix_symbols(build_laplace_data(), 0);
  EXPECT_EQ(transcribed::difference(*q.find(0), transcribed::parametrix_top()), "");
  EXPECT_EQ(transcribed::difference(*q.find(-1), transcribed::parametrix_mid()), "");
  EXPECT_EQ(transcribed::difference(*q.find(-2), transcribed::parametrix_low()), "");
}

TEST(Parametrix, ShiftedPowerMatchesPartOneDisplay) {
  const PDOSymbol q = parametrix_symbols(build_laplace_data(), 1);
  EXPECT_EQ(q.find(0)->x_exact, 0);
  EXPECT_EQ(transcribed::difference(*q.find(0), transcribed::part_one_symbol()), "");
}

TEST(Parametrix, VanishingTaTermsAndMidPair) {
  const PDOSymbol q = parametrix_symbols(build_laplace_data(), 0);
  EXPECT_TRUE(tagged(*q.find(-1), "T_a").is_zero());
  EXPECT_TRUE(tagged(*q.find(-2), "TT").is_zero());
  EXPECT_TRUE(tagged(*q.find(-2), "TaTa").is_zero());
  EXPECT_EQ(tagged(*q.find(-1), "Tab.").terms.size(), 2u);
  // sum_a T_aa = 0 by pair antisymmetry.
  EXPECT_TRUE(pdo::simplify(tagged(*q.find(-2), "Taa")).is_zero());
}

TEST(Parametrix, UnsupportedPower) {
  EXPECT_THROW(parametrix_symbols(build_laplace_data(), 2), DomainError);
  EXPECT_THROW(parametrix_symbols(build_laplace_data(), -1), DomainError);
}

TEST(SymbolOfA, PrincipalAndBasePoint) {
  const PDOSymbol a = symbol_of_A();
  Component expected;
  const CliffordPoly principal = CliffordPoly::vector(Family::C, Field::U) * CliffordPoly::xi(Family::C) * Coeff::i();
  for (const auto& t : principal.terms()) {
    expected.terms.push_back({t, Affine{}, ""});
  }
  EXPECT_EQ(transcribed::difference(*a.find(1), expected), "");
  Component origin = pdo::evaluate_at_origin(*a.find(0));
  Component uv;
  const CliffordPoly base = CliffordPoly::vector(Family::C, Field::U) * CliffordPoly::vector(Family::CHat, Field::V);
  for (const auto& t : base.terms()) {
    uv.terms.push_back({t, Affine{}, ""});
  }
  EXPECT_EQ(transcribed::difference(origin, uv), "");
}

TEST(SymbolOfAB, BasePointDisplays) {
  const PDOSymbol ab = pdo::evaluate_at_origin(pdo::compose(symbol_of_A(), symbol_of_B(), {2, 1, 0}));
  EXPECT_EQ(transcribed::difference(*ab.find(0), transcribed::sigma0_AB_origin()), "");
  EXPECT_EQ(transcribed::difference(*ab.find(1), transcribed::sigma1_AB_origin()), "");
  EXPECT_EQ(transcribed::difference(*ab.find(2), transcribed::sigma2_AB()), "");
}

TEST(SymbolOfAB, PerturbedDisplayIsRejected) {
  const PDOSymbol ab = pdo::evaluate_at_origin(pdo::compose(symbol_of_A(), symbol_of_B(), {0}));
  Component wrong = transcribed::sigma0_AB_origin();
  wrong.terms.back().body.coeff.coeff *= Coeff(2);
  EXPECT_NE(transcribed::difference(*ab.find(0), wrong), "");
}

TEST(SymbolOfAB, EveryBasePointPieceIsNamed) {
  const PDOSymbol ab = pdo::evaluate_at_origin(pdo::compose(symbol_of_A(), symbol_of_B(), {0}));
  for (const auto& t : ab.find(0)->terms) EXPECT_FALSE(residue::sigma0_piece(t.tag).empty()) << t.tag;
}

}  // namespace
}  // namespace wres::operators
