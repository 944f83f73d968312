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

// Abstract-index tensor monomials over the frame at the base point:
// Kronecker deltas, curvature, vector-field components and their first
// derivatives, cotangent variables and normal coordinates.

#ifndef WRES_TENSOR_HPP_
#define WRES_TENSOR_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wres/index.hpp"
#include "wres/number.hpp"

namespace wres::tensor {

enum class Kind : std::uint8_t {
  Delta,      // delta_{ab}
  Riemann,    // R_{abcd}
  Ricci,      // Ric_{ab} = sum_l R_{lalb}
  Scalar,     // s = sum_a Ric_{aa}
  Vec,        // F_a
  DVec,       // d_{x_j} F_a, equal to (nabla_{e_j} F)_a at the base point
  Xi,         // xi_a
  Coord,      // x^a
  NormSq,     // |F|^2
  TrId,       // tr[id] = 2^{2m}
  VolSphere,  // Vol(S^{n-1}) = 2 pi^m / Gamma(m)
};

enum class Field : std::uint8_t { None, U, W, V };

std::string field_name(Field f);

struct Factor {
  Kind kind = Kind::Scalar;
  Field field = Field::None;
  std::array<Index, 4> idx{};

  static Factor delta(Index a, Index b) { return {Kind::Delta, Field::None, {a, b}}; }
  static Factor riemann(Index a, Index b, Index c, Index d) {
    return {Kind::Riemann, Field::None, {a, b, c, d}};
  }
  static Factor ricci(Index a, Index b) { return {Kind::Ricci, Field::None, {a, b}}; }
  static Factor scalar() { return {Kind::Scalar}; }
  static Factor vec(Field f, Index a) { return {Kind::Vec, f, {a}}; }
  static Factor dvec(Field f, Index j, Index a) { return {Kind::DVec, f, {j, a}}; }
  static Factor xi(Index a) { return {Kind::Xi, Field::None, {a}}; }
  static Factor coord(Index a) { return {Kind::Coord, Field::None, {a}}; }
  static Factor norm_sq(Field f) { return {Kind::NormSq, f}; }
  static Factor trid() { return {Kind::TrId}; }
  static Factor vol() { return {Kind::VolSphere}; }

  int arity() const;
  std::span<const Index> indices() const { return {idx.data(), static_cast<std::size_t>(arity())}; }
  std::span<Index> indices() { return {idx.data(), static_cast<std::size_t>(arity())}; }

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;

  std::string to_string() const;
};

struct TensorTerm {
  Coeff coeff = Coeff(1);
  std::vector<Factor> factors;

  TensorTerm() = default;
  TensorTerm(Coeff c, std::vector<Factor> f = {}) : coeff(std::move(c)), factors(std::move(f)) {}

  // Plain concatenation; the caller keeps summation labels apart.
  TensorTerm& operator*=(const TensorTerm& o);
  std::string to_string() const;
};

using TensorSum = std::vector<TensorTerm>;

// Occurrence count of every label in the term plus the external labels
// (for example the indices of an attached Clifford word).
std::map<Index, int> label_counts(const TensorTerm& t, std::span<const Index> external = {});
std::int32_t max_label(const TensorTerm& t);
void relabel(TensorTerm& t, const LabelMap& map);

// Eliminates every delta carrying a summed label; delta_{aa} over a summed
// label becomes the dimension n = 2m, deltas between concrete indices
// become 0 or 1. External labels take part in the substitution and are
// rewritten in place. Returns false when the term vanishes.
bool contract_deltas(TensorTerm& t, std::vector<Index>* external = nullptr);
TensorTerm contract_deltas(TensorTerm t);

// Monoterm canonical form: contraction rules (R_{lalb} -> Ric_{ab},
// Ric_{aa} -> s, F_a F_a -> |F|^2), Riemann pair symmetries with sign,
// canonical renaming of summed labels, and detection of terms forced to
// zero by symmetry. External labels are named first, in order of
// occurrence, and rewritten in place. Returns nullopt for zero.
std::optional<TensorTerm> canonicalize(TensorTerm t, std::vector<Index>* external = nullptr);

// Rewrites every Riemann factor with four distinct labels a<b<c<d of the
// form R_{adbc} as R_{acbd} - R_{abcd}.
TensorSum bianchi_reduce(const TensorSum& terms);

// Adds coefficients of identical monomials and drops zeros.
TensorSum merge(TensorSum terms);

TensorSum simplify(const TensorSum& terms, bool bianchi = true);

struct InvariantMonomial {
  std::string atoms;  // "s*g(u,w)", "1" for the empty product
  int trid = 0;
  int vol = 0;

  friend auto operator<=>(const InvariantMonomial&, const InvariantMonomial&) = default;
  std::string to_string() const;
};

// Polynomial over the invariant atoms with coefficients rational in m.
class ScalarInvariantExpr {
 public:
  void add(const InvariantMonomial& mono, const Coeff& c);
  ScalarInvariantExpr& operator+=(const ScalarInvariantExpr& o);
  friend ScalarInvariantExpr operator+(ScalarInvariantExpr a, const ScalarInvariantExpr& b) {
    return a += b;
  }
  friend bool operator==(const ScalarInvariantExpr& a, const ScalarInvariantExpr& b) {
    return a.terms_ == b.terms_ && a.residuals_.empty() && b.residuals_.empty();
  }

  const std::map<InvariantMonomial, Coeff>& terms() const { return terms_; }
  Coeff coefficient(const std::string& atoms, int trid = 1, int vol = 1) const;
  bool is_zero() const { return terms_.empty() && residuals_.empty(); }
  bool is_real() const;

  // Terms that are fully contracted but not expressible in the atom set
  // (surviving curvature or derivative factors).
  const std::vector<TensorTerm>& residuals() const { return residuals_; }
  void add_residual(TensorTerm t) { residuals_.push_back(std::move(t)); }

  // Drops atoms containing the given substring, e.g. "|V|^2".
  ScalarInvariantExpr without_atom(const std::string& needle) const;

  std::string to_string() const;

 private:
  std::map<InvariantMonomial, Coeff> terms_;
  std::vector<TensorTerm> residuals_;
};

// Groups canonical, fully contracted terms by invariant atom. Free or
// concrete indices raise ContractViolation; unrecognized structures are
// kept as residuals.
ScalarInvariantExpr collect(const TensorSum& terms);

}  // namespace wres::tensor

#endif  // WRES_TENSOR_HPP_
