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

// Symbol data of the deformed operator D_V = d + d* + chat(V) in normal
// coordinates: the Laplace-type data T_a, T_ab, E of D_V^2, the parametrix
// symbols of D_V^{-2m} and D_V^{-2m+2}, and the symbols of c(u) D_V and
// c(w) D_V.

#ifndef WRES_OPERATORS_HPP_
#define WRES_OPERATORS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/pdo.hpp"

namespace wres::operators {

struct WittenOptions {
  // false drops the deformation, leaving d + d*.
  bool with_V = true;
};

using NamedPoly = std::pair<std::string, clifford::CliffordPoly>;

struct LaplaceData {
  // Free label of T_a; T_ab carries free labels (a, b).
  static constexpr Index a = Index::label(1);
  static constexpr Index b = Index::label(2);

  clifford::CliffordPoly T_a;
  // Tagged pieces of T_ab and E; every summed label is >= 3.
  std::vector<NamedPoly> T_ab;
  std::vector<NamedPoly> E;

  clifford::CliffordPoly T_ab_total() const;
  clifford::CliffordPoly E_total() const;
};

LaplaceData build_laplace_data(const WittenOptions& options = {});

// Components at offsets 2p, 2p-1, 2p-2 from -2m of the parametrix of
// D^{-2(m-p)}, p = power_offset in {0, 1}. Exact in x through orders
// 2, 1, 0 respectively.
pdo::PDOSymbol parametrix_symbols(const LaplaceData& data, int power_offset);

// sigma_1 = i c(xi), sigma_0 = 1/4 sum omega_st(e_p) c_p (chat_s chat_t - c_s c_t) + chat(V)
// with omega_st(e_p) = -1/2 R_{lpts} x^l to first order.
pdo::PDOSymbol symbol_of_D(const WittenOptions& options = {});
pdo::PDOSymbol symbol_of_A(const WittenOptions& options = {});
pdo::PDOSymbol symbol_of_B(const WittenOptions& options = {});

// Symbol of multiplication by a Clifford polynomial independent of xi.
pdo::PDOSymbol multiplication_symbol(const clifford::CliffordPoly& p, const std::string& tag);

}  // namespace wres::operators

#endif  // WRES_OPERATORS_HPP_
