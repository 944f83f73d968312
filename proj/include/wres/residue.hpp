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

// Residue densities: order -2m component -> fiber trace -> cosphere
// integral -> contraction -> invariant atoms. Results carry the TrId and
// Vol tokens.

#ifndef WRES_RESIDUE_HPP_
#define WRES_RESIDUE_HPP_

#include <map>
#include <string>
#include <vector>

#include "wres/operators.hpp"
#include "wres/pdo.hpp"
#include "wres/tensor.hpp"

namespace wres::residue {

struct Options {
  bool bianchi = true;
  bool with_V = true;
  // 0 reads WRES_WORKERS, falling back to 1.
  int workers = 0;
};

int resolve_workers(int requested);

tensor::ScalarInvariantExpr wres_density(const std::vector<pdo::SymbolTerm>& terms, bool bianchi = true);
tensor::ScalarInvariantExpr wres_density(const pdo::Component& c, bool bianchi = true);

tensor::ScalarInvariantExpr compute_metric_functional(const Options& options = {});

class TermLedger {
 public:
  // Every label in presentation order: terms, sub-terms and totals.
  static const std::vector<std::string>& all_labels();
  static bool is_known(const std::string& label);
  // Enclosing label whose value must absorb this one: "II-3-E" -> "II-3",
  // "II-3" -> "S2", "S2" -> "einstein". Empty for roots.
  static std::string parent(const std::string& label);
  static std::vector<std::string> children(const std::string& label);

  void set(const std::string& label, tensor::ScalarInvariantExpr value);
  bool contains(const std::string& label) const { return entries_.contains(label); }
  const tensor::ScalarInvariantExpr& at(const std::string& label) const;
  // Present labels in presentation order.
  std::vector<std::string> labels() const;

 private:
  std::map<std::string, tensor::ScalarInvariantExpr> entries_;
};

// Part I, Part II with sub-terms, the totals S1, S2, einstein; the metric
// functional is added under "metric".
TermLedger compute_einstein_functional(const Options& options = {});

// The sub-term letter of a sigma_0(AB) tag, or empty when the tag is not
// one of the base-point pieces.
std::string sigma0_piece(const std::string& tag);

// Norm exponent, as n(m) with |xi|^{n(m)}, of each tagged piece of
// sigma_{-2m}(D^{-2m+2}).
std::map<std::string, Affine> part_one_exponents(const Options& options = {});

}  // namespace wres::residue

#endif  // WRES_RESIDUE_HPP_
