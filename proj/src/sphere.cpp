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

#include "wres/sphere.hpp"

#include <algorithm>

#include "wres/error.hpp"

namespace wres::sphere {

using tensor::Factor;
using tensor::TensorSum;
using tensor::TensorTerm;

namespace {

void pairings(std::vector<Index>& rest, std::vector<Factor>& acc, TensorSum& out) {
  if (rest.empty()) {
    out.emplace_back(Coeff(1), acc);
    return;
  }
  Index first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    std::vector<Index> next;
    next.reserve(rest.size() - 2);
    for (std::size_t k = 1; k < rest.size(); ++k) {
      if (k != j) next.push_back(rest[k]);
    }
    acc.push_back(Factor::delta(first, rest[j]));
    pairings(next, acc, out);
    acc.pop_back();
  }
}

}  // namespace

TensorSum integrate_monomial(std::span<const Index> indices) {
  if (indices.size() % 2 == 1) return {};
  std::vector<Index> rest(indices.begin(), indices.end());
  std::vector<Factor> acc;
  TensorSum out;
  pairings(rest, acc, out);
  // n(n+2)...(n+2k-2) = 2^k m(m+1)...(m+k-1)
  const long k = static_cast<long>(indices.size() / 2);
  Coeff norm(Gaussian(Rational(1, 1L << k)));
  for (long j = 0; j < k; ++j) norm.divide_by_linear(j);
  for (TensorTerm& t : out) {
    t.coeff = norm;
    t.factors.push_back(Factor::vol());
  }
  return out;
}

TensorSum integrate_xi(const TensorTerm& t) {
  std::vector<Index> slots;
  TensorTerm rest(t.coeff);
  for (const Factor& f : t.factors) {
    if (f.kind == tensor::Kind::Xi) {
      slots.push_back(f.idx[0]);
    } else {
      rest.factors.push_back(f);
    }
  }
  TensorSum out;
  for (const TensorTerm& p : integrate_monomial(slots)) {
    TensorTerm r = rest;
    r *= p;
    out.push_back(std::move(r));
  }
  return out;
}

Rational integrate_exponents(std::span<const int> exponents, int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("sphere dimension must be even and >= 2");
  if (static_cast<int>(exponents.size()) != n) {
    throw ContractViolation("exponent list length must equal the dimension");
  }
  std::vector<Index> slots;
  for (int i = 0; i < n; ++i) {
    if (exponents[i] < 0) throw DomainError("negative exponent");
    for (int k = 0; k < exponents[i]; ++k) slots.push_back(Index::concrete(i + 1));
  }
  Rational total;
  for (TensorTerm t : integrate_monomial(slots)) {
    if (!tensor::contract_deltas(t, nullptr)) continue;
    total += t.coeff.evaluate(Rational(n / 2)).re();
  }
  return total;
}

std::string VolSphereValue::to_string() const {
  std::string c = wres::to_string(coefficient);
  std::string pi = pi_power == 1 ? "pi" : "pi^" + std::to_string(pi_power);
  if (c == "1") return pi;
  if (coefficient.get_den() == 1) return c + "*" + pi;
  std::string head = coefficient.get_num() == 1 ? pi : coefficient.get_num().get_str() + "*" + pi;
  return head + "/" + coefficient.get_den().get_str();
}

VolSphereValue vol_sphere(int m) {
  if (m < 2) throw DomainError("vol_sphere requires m >= 2");
  mpz_class factorial = 1;
  for (int k = 2; k < m; ++k) factorial *= k;
  Rational c(2, 1);
  c /= Rational(factorial);
  return {c, m};
}

VolSphereValue vol_sphere_for_dimension(int n) {
  if (n <= 0 || n % 2 != 0) throw DomainError("dimension must be positive and even");
  return vol_sphere(n / 2);
}

}  // namespace wres::sphere
