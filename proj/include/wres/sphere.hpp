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

// Monomial integrals over the unit sphere S^{n-1}, n = 2m.

#ifndef WRES_SPHERE_HPP_
#define WRES_SPHERE_HPP_

#include <span>
#include <string>
#include <vector>

#include "wres/index.hpp"
#include "wres/number.hpp"
#include "wres/tensor.hpp"

namespace wres::sphere {

// Sum over perfect pairings of the slots, times Vol / (n(n+2)...(n+2k-2)).
// Odd length gives the empty sum; the empty monomial gives Vol.
tensor::TensorSum integrate_monomial(std::span<const Index> indices);

// Replaces every xi factor of t by its sphere integral.
tensor::TensorSum integrate_xi(const tensor::TensorTerm& t);

// Integral of prod_i x_i^{e_i} over S^{n-1} as a rational multiple of Vol,
// evaluated through the pairing formula at concrete n.
Rational integrate_exponents(std::span<const int> exponents, int n);

// Vol(S^{n-1}) = 2 pi^m / Gamma(m) = coefficient * pi^m.
struct VolSphereValue {
  Rational coefficient;
  int pi_power = 0;
  std::string to_string() const;
};

VolSphereValue vol_sphere(int m);
VolSphereValue vol_sphere_for_dimension(int n);

}  // namespace wres::sphere

#endif  // WRES_SPHERE_HPP_
