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

// Homogeneous symbol components in normal coordinates around the base
// point, and the truncated composition formula
//   sigma(PQ) = sum_alpha (-i)^|alpha| / alpha! d_xi^alpha sigma(P) d_x^alpha sigma(Q).

#ifndef WRES_PDO_HPP_
#define WRES_PDO_HPP_

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/number.hpp"

namespace wres::pdo {

// body.coeff carries xi_a and x^a factors; the norm power multiplies by
// |xi|^norm. The tag records which named piece of the input data a term
// descends from.
struct SymbolTerm {
  clifford::CliffTerm body;
  Affine norm;
  std::string tag;

  int xi_degree() const;
  int x_degree() const;
  Affine homogeneity() const { return norm + Affine{0, xi_degree()}; }
  std::string to_string() const;
};

constexpr int kExactInX = INT_MAX / 2;

struct Component {
  std::vector<SymbolTerm> terms;
  // Taylor order in x through which the terms are exact.
  int x_exact = kExactInX;

  bool is_zero() const { return terms.empty(); }
  void append(const Component& o);
};

// Component at offset k has homogeneity m_coef * m + k.
class PDOSymbol {
 public:
  PDOSymbol() = default;
  // complete: a differential operator symbol; absent components are zero
  // and higher xi-derivatives vanish exactly.
  PDOSymbol(int m_coef, bool complete) : m_coef_(m_coef), complete_(complete) {}

  int m_coef() const { return m_coef_; }
  bool complete() const { return complete_; }
  Affine order(int offset) const { return {m_coef_, offset}; }

  void set(int offset, Component c);
  const Component* find(int offset) const;
  const std::map<int, Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int top() const;
  // Lowest offset whose value is known; below it the symbol is unknown
  // unless the symbol is complete.
  int lowest() const;

 private:
  int m_coef_ = 0;
  bool complete_ = false;
  std::map<int, Component> components_;
};

Component d_xi(const Component& c, Index j);
Component d_x(const Component& c, Index j);
PDOSymbol d_xi(const PDOSymbol& s, Index j);
PDOSymbol d_x(const PDOSymbol& s, Index j);

// Drops every term of positive x-degree.
Component evaluate_at_origin(const Component& c);
PDOSymbol evaluate_at_origin(const PDOSymbol& s);

// Product of two components with tags joined as "left|right".
Component product(const Component& a, const Component& b, const Coeff& factor);

struct Contribution {
  int left = 0;   // offset of the P component
  int alpha = 0;  // |alpha|
  int right = 0;  // offset of the Q component
  Component value;
};

// All summands of the composition landing on the target offset, in
// decreasing (left, alpha) order. Raises TruncationError when a needed
// component or Taylor coefficient is not available.
std::vector<Contribution> compose_contributions(const PDOSymbol& p, const PDOSymbol& q, int target);

PDOSymbol compose(const PDOSymbol& p, const PDOSymbol& q, const std::vector<int>& targets);

// Merges terms with equal tag, norm and canonical body.
Component simplify(const Component& c);

}  // namespace wres::pdo

#endif  // WRES_PDO_HPP_
