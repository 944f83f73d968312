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

// Brute-force ground truth for the test suites: the Clifford action on
// Lambda*(R^n) as exact integer matrices, Gamma-function sphere integrals,
// and numeric instantiation of tensor terms. Nothing in src/ depends on it.

#ifndef WRES_TESTS_ORACLE_HPP_
#define WRES_TESTS_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/number.hpp"
#include "wres/tensor.hpp"

namespace oracle {

using wres::Gaussian;
using wres::Rational;

// Sparse exact integer matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : rows_(dim) {}
  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return rows_.size(); }
  std::int64_t at(std::size_t row, std::size_t col) const;
  void add_to(std::size_t row, std::size_t col, std::int64_t v);
  std::int64_t trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator*=(std::int64_t k);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(std::int64_t k, Matrix a) { return a *= k; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::vector<std::map<std::size_t, std::int64_t>> rows_;
};

// Basis: subsets of {1..n} ordered lexicographically as sorted index
// lists; signs of e^a wedge and i_{e_a} count the indices below a.
class ExteriorRep {
 public:
  explicit ExteriorRep(int n);

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  // Bit k-1 set when e_k belongs to the basis form.
  const std::vector<std::uint32_t>& basis() const { return basis_; }

  const Matrix& wedge(int a) const { return wedge_.at(a - 1); }
  const Matrix& contraction(int a) const { return contraction_.at(a - 1); }
  const Matrix& c(int a) const { return c_.at(a - 1); }
  const Matrix& chat(int a) const { return chat_.at(a - 1); }
  const Matrix& generator(const wres::clifford::Generator& g) const;

  Matrix word(const wres::clifford::CliffordWord& w) const;
  // Coefficients must reduce to integers: concrete deltas only, no m.
  Matrix poly(const wres::clifford::CliffordPoly& p) const;

 private:
  int n_;
  std::vector<std::uint32_t> basis_;
  std::vector<Matrix> wedge_, contraction_, c_, chat_;
};

// Gamma(k/2), k >= 1, as q * sqrt(pi)^e.
struct HalfGamma {
  Rational q;
  int sqrt_pi = 0;
};
HalfGamma gamma_half(int k);

// Integral of prod x_i^{e_i} over S^{n-1} divided by Vol(S^{n-1}).
Rational sphere_integral_exact(std::span<const int> exponents, int n);

// Integer algebraic curvature tensor (pair antisymmetry, pair exchange,
// first Bianchi) with Ric_ab = sum_l R_lalb, plus random vector fields,
// first derivatives, xi and x.
class Instantiation {
 public:
  int n() const { return n_; }
  std::int64_t R(int a, int b, int c, int d) const;
  std::int64_t Ric(int a, int b) const;
  std::int64_t s() const { return s_; }
  std::int64_t vec(wres::tensor::Field f, int a) const;
  void set_vec(wres::tensor::Field f, std::vector<std::int64_t> values);

  // Sums every abstract label over 1..n; labels occurring once take their
  // value from free. TrId = 2^n, Vol = 1, m = n/2.
  Gaussian evaluate(const wres::tensor::TensorTerm& t, const std::map<wres::Index, int>& free = {}) const;
  Gaussian evaluate(const wres::tensor::TensorSum& s, const std::map<wres::Index, int>& free = {}) const;

  // Operator of a Clifford-valued symbol on the exterior algebra, every
  // abstract label summed over 1..n. Zero entries are dropped.
  using ComplexMatrix = std::map<std::pair<std::size_t, std::size_t>, Gaussian>;
  ComplexMatrix act(const ExteriorRep& rep, const std::vector<wres::clifford::CliffTerm>& terms) const;

  friend Instantiation random_tensor_instantiation(std::uint64_t seed, int n);

 private:
  std::int64_t factor(const wres::tensor::Factor& f, const std::vector<int>& values) const;

  int n_ = 0;
  std::vector<std::int64_t> R_, Ric_;
  std::int64_t s_ = 0;
  std::map<wres::tensor::Field, std::vector<std::int64_t>> vec_;
  std::map<wres::tensor::Field, std::vector<std::int64_t>> dvec_;
  std::vector<std::int64_t> xi_, x_;
};

Instantiation random_tensor_instantiation(std::uint64_t seed, int n = 4);

// Numeric value of an invariant expression: atoms s, |F|^2, Ric(F,G),
// g(F,G) from the instantiation, TrId = 2^n, Vol = 1, m = n/2.
Gaussian evaluate(const Instantiation& inst, const wres::tensor::ScalarInvariantExpr& e);

}  // namespace oracle

#endif  // WRES_TESTS_ORACLE_HPP_
