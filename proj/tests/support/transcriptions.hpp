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

// Symbol displays typed in by hand from the source derivation, for
// term-by-term comparison with what the engine derives. Index names follow
// the displays, mapped to labels 11 and up.

#ifndef WRES_TESTS_TRANSCRIPTIONS_HPP_
#define WRES_TESTS_TRANSCRIPTIONS_HPP_

#include <string>

#include "wres/pdo.hpp"

namespace transcribed {

// Parametrix of D_V^{-2m} at offsets 0, -1, -2 with the Witten data
// substituted.
wres::pdo::Component parametrix_top();
wres::pdo::Component parametrix_mid();
wres::pdo::Component parametrix_low();

// sigma_{-2m}(D_V^{-2m+2}), with the norm powers forced by homogeneity
// (the display prints |xi|^{-2m-4} and |xi|^{-2m-2} one step too low).
wres::pdo::Component part_one_symbol();

// sigma_j(AB) at the base point, A = c(u) D_V, B = c(w) D_V. sigma_0 follows
// the evaluated display, which has c(w) and c(e_gamma) in the right places;
// sigma_1 reads the stray c(v) as c(u).
wres::pdo::Component sigma0_AB_origin();
wres::pdo::Component sigma1_AB_origin();
wres::pdo::Component sigma2_AB();

// Empty when a and b agree after canonicalization, tags ignored, or when
// what survives acts as zero on the exterior algebra at random integer
// data (n = 4 twice, n = 6 once); otherwise the surviving difference.
std::string difference(const wres::pdo::Component& a, const wres::pdo::Component& b);

}  // namespace transcribed

#endif  // WRES_TESTS_TRANSCRIPTIONS_HPP_
