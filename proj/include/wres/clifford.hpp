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

// Words in the two anticommuting Clifford families acting on forms:
//   c_a c_b + c_b c_a = -2 delta_ab,  chat_a chat_b + chat_b chat_a = 2 delta_ab,
//   c_a chat_b + chat_b c_a = 0.

#ifndef WRES_CLIFFORD_HPP_
#define WRES_CLIFFORD_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wres/index.hpp"
#include "wres/tensor.hpp"

namespace wres::clifford {

enum class Family : std::uint8_t { C, CHat };

struct Generator {
  Family family = Family::C;
  Index index;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
  std::string to_string() const;
};

using CliffordWord = std::vector<Generator>;

std::string to_string(const CliffordWord& w);

// Canonical: every C generator precedes every CHat generator, indices
// strictly increasing within each family.
bool is_canonical(const CliffordWord& w);

// Parses "c1 c2 chat1"; indices are concrete frame values >= 1.
CliffordWord parse_word(std::string_view text);

struct CliffTerm {
  tensor::TensorTerm coeff;
  CliffordWord word;

  std::vector<Index> word_indices() const;
};

class CliffordPoly {
 public:
  CliffordPoly() = default;

  static CliffordPoly identity();
  static CliffordPoly scalar(tensor::TensorTerm t);
  static CliffordPoly word(CliffordWord w);
  static CliffordPoly generator(Family f, Index i);
  // c(F) = sum_a F_a c_a, and likewise for chat.
  static CliffordPoly vector(Family f, tensor::Field field);
  // c(xi) = sum_a xi_a c_a.
  static CliffordPoly xi(Family f);

  const std::vector<CliffTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(CliffTerm t);

  CliffordPoly& operator+=(const CliffordPoly& o);
  CliffordPoly& operator-=(const CliffordPoly& o);
  CliffordPoly& operator*=(const Coeff& c);
  CliffordPoly& operator*=(const tensor::TensorTerm& t);
  friend CliffordPoly operator+(CliffordPoly a, const CliffordPoly& b) { return a += b; }
  friend CliffordPoly operator-(CliffordPoly a, const CliffordPoly& b) { return a -= b; }
  friend CliffordPoly operator*(CliffordPoly a, const Coeff& c) { return a *= c; }
  friend CliffordPoly operator*(const Coeff& c, CliffordPoly a) { return a *= c; }

  std::string to_string() const;

 private:
  std::vector<CliffTerm> terms_;
};

// Renames the summed labels of b apart from every label of a, then
// concatenates. No reduction.
CliffTerm multiply(const CliffTerm& a, const CliffTerm& b);
CliffordPoly multiply(const CliffordPoly& a, const CliffordPoly& b);
inline CliffordPoly operator*(const CliffordPoly& a, const CliffordPoly& b) {
  return multiply(a, b);
}

// Rewrites into canonical words. Deltas produced by reordering stay in the
// tensor coefficient unresolved.
CliffordPoly normal_order(const CliffordWord& w);
CliffordPoly normal_order(const CliffTerm& t);
CliffordPoly normal_order(const CliffordPoly& p);

// Scalar part of a single-family word as a sum of delta pairings.
tensor::TensorSum scalar_part(const CliffordWord& w);

// Fiberwise trace; each result term carries one TrId factor.
tensor::TensorSum trace(const CliffTerm& t);
tensor::TensorSum trace(const CliffordPoly& p);

// Normal ordering, delta contraction and coefficient canonicalization
// repeated to a fixed point, then merging. Equal elements of the algebra
// simplify to identical polynomials for the term shapes used here.
CliffordPoly simplify(const CliffordPoly& p);
bool equivalent(const CliffordPoly& a, const CliffordPoly& b);

}  // namespace wres::clifford

#endif  // WRES_CLIFFORD_HPP_
