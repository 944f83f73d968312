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

#include "wres/pdo.hpp"

#include <algorithm>

#include "wres/error.hpp"

namespace wres::pdo {

using clifford::CliffTerm;
using tensor::Factor;
using tensor::Kind;

namespace {

constexpr std::int32_t kSlotBase = 1 << 20;

std::map<Index, int> counts_of(const SymbolTerm& t) {
  return tensor::label_counts(t.body.coeff, t.body.word_indices());
}

void replace_label(SymbolTerm& t, Index from, Index to) {
  for (Factor& f : t.body.coeff.factors) {
    for (Index& i : f.indices()) {
      if (i == from) i = to;
    }
  }
  for (clifford::Generator& g : t.body.word) {
    if (g.index == from) g.index = to;
  }
}

// Moves a summed label equal to j out of the way before j is introduced
// as a free label.
void free_label(SymbolTerm& t, Index j) {
  auto counts = counts_of(t);
  auto it = counts.find(j);
  if (it == counts.end()) return;
  if (it->second != 2) {
    throw ContractViolation("derivative slot " + j.to_string() + " already free in " + t.to_string());
  }
  std::int32_t top = 0;
  for (const auto& [i, c] : counts) top = std::max(top, i.id);
  replace_label(t, j, Index::label(top + 1));
}

// The factor at position k, carrying label a, turns into delta(a, j).
SymbolTerm substitute_slot(const SymbolTerm& t, std::size_t k, Index a, Index j) {
  SymbolTerm r = t;
  r.body.coeff.factors.erase(r.body.coeff.factors.begin() + static_cast<long>(k));
  auto counts = counts_of(r);
  auto it = counts.find(a);
  if (a.is_abstract() && it != counts.end() && it->second == 1) {
    replace_label(r, a, j);
  } else {
    r.body.coeff.factors.push_back(Factor::delta(a, j));
  }
  return r;
}

std::string derivative_tag(tensor::Field f) {
  switch (f) {
    case tensor::Field::U: return "/dU";
    case tensor::Field::W: return "/dW";
    case tensor::Field::V: return "/dV";
    case tensor::Field::None: break;
  }
  return "/d?";
}

}  // namespace

int SymbolTerm::xi_degree() const {
  return static_cast<int>(std::count_if(body.coeff.factors.begin(), body.coeff.factors.end(),
                                        [](const Factor& f) { return f.kind == Kind::Xi; }));
}

int SymbolTerm::x_degree() const {
  return static_cast<int>(std::count_if(body.coeff.factors.begin(), body.coeff.factors.end(),
                                        [](const Factor& f) { return f.kind == Kind::Coord; }));
}

std::string SymbolTerm::to_string() const {
  std::string s = "{" + tag + "} " + body.coeff.to_string();
  if (norm != Affine{}) s += "*|xi|^(" + norm.to_string() + ")";
  return s + " [" + clifford::to_string(body.word) + "]";
}

void Component::append(const Component& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  x_exact = std::min(x_exact, o.x_exact);
}

void PDOSymbol::set(int offset, Component c) { components_[offset] = std::move(c); }

const Component* PDOSymbol::find(int offset) const {
  auto it = components_.find(offset);
  return it == components_.end() ? nullptr : &it->second;
}

int PDOSymbol::top() const {
  if (components_.empty()) throw ContractViolation("empty symbol has no top component");
  return components_.rbegin()->first;
}

int PDOSymbol::lowest() const {
  if (components_.empty()) throw ContractViolation("empty symbol has no lowest component");
  return components_.begin()->first;
}

Component d_xi(const Component& c, Index j) {
  Component out;
  out.x_exact = c.x_exact;
  for (SymbolTerm t : c.terms) {
    free_label(t, j);
    const auto& factors = t.body.coeff.factors;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (factors[k].kind == Kind::Xi) out.terms.push_back(substitute_slot(t, k, factors[k].idx[0], j));
    }
    if (t.norm != Affine{}) {
      SymbolTerm r = t;
      r.body.coeff.coeff *= Coeff(t.norm.as_polynomial());
      r.body.coeff.factors.push_back(Factor::xi(j));
      r.norm = t.norm - Affine{0, 2};
      out.terms.push_back(std::move(r));
    }
  }
  return out;
}

Component d_x(const Component& c, Index j) {
  Component out;
  if (c.x_exact < 1) {
    if (c.terms.empty()) return out;
    throw TruncationError("x-derivative of a component known only at the base point");
  }
  out.x_exact = c.x_exact == kExactInX ? kExactInX : c.x_exact - 1;
  for (SymbolTerm t : c.terms) {
    free_label(t, j);
    const auto& factors = t.body.coeff.factors;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const Factor& f = factors[k];
      if (f.kind == Kind::Coord) {
        out.terms.push_back(substitute_slot(t, k, f.idx[0], j));
      } else if (f.kind == Kind::Vec) {
        SymbolTerm r = t;
        r.body.coeff.factors[k] = Factor::dvec(f.field, j, f.idx[0]);
        r.tag += derivative_tag(f.field);
        out.terms.push_back(std::move(r));
      } else if (f.kind == Kind::DVec) {
        throw TruncationError("second derivatives of vector fields are not modeled: " + t.to_string());
      }
    }
  }
  return out;
}

PDOSymbol d_xi(const PDOSymbol& s, Index j) {
  PDOSymbol out(s.m_coef(), s.complete());
  for (const auto& [k, c] : s.components()) out.set(k - 1, d_xi(c, j));
  return out;
}

PDOSymbol d_x(const PDOSymbol& s, Index j) {
  PDOSymbol out(s.m_coef(), s.complete());
  for (const auto& [k, c] : s.components()) out.set(k, d_x(c, j));
  return out;
}

Component evaluate_at_origin(const Component& c) {
  if (c.x_exact < 0) throw TruncationError("component not exact at the base point");
  Component out;
  out.x_exact = 0;
  for (const SymbolTerm& t : c.terms) {
    if (t.x_degree() == 0) out.terms.push_back(t);
  }
  return out;
}

PDOSymbol evaluate_at_origin(const PDOSymbol& s) {
  PDOSymbol out(s.m_coef(), s.complete());
  for (const auto& [k, c] : s.components()) out.set(k, evaluate_at_origin(c));
  return out;
}

Component product(const Component& a, const Component& b, const Coeff& factor) {
  Component out;
  out.x_exact = std::min(a.x_exact, b.x_exact);
  if (factor.is_zero()) return out;
  for (const SymbolTerm& x : a.terms) {
    for (const SymbolTerm& y : b.terms) {
      SymbolTerm r{clifford::multiply(x.body, y.body), x.norm + y.norm, x.tag + "|" + y.tag};
      r.body.coeff.coeff *= factor;
      if (!r.body.coeff.coeff.is_zero()) out.terms.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Contribution> compose_contributions(const PDOSymbol& p, const PDOSymbol& q, int target) {
  std::vector<Contribution> out;
  if (p.empty() || q.empty()) return out;
  auto require = [](const PDOSymbol& s, int offset, const char* side) -> const Component* {
    const Component* c = s.find(offset);
    if (c == nullptr && !s.complete() && offset < s.lowest()) {
      throw TruncationError(std::string(side) + " symbol truncated above offset " + std::to_string(offset));
    }
    return c;
  };
  for (int lo = p.top(); lo >= target - q.top(); --lo) {
    const Component* cp = require(p, lo, "left");
    if (cp == nullptr) continue;
    for (int ro = q.top(); ro >= target - lo; --ro) {
      const int alpha = lo + ro - target;
      const Component* cq = require(q, ro, "right");
      if (cq == nullptr) continue;
      if (alpha > 2 && !p.complete()) {
        throw TruncationError("composition needs |alpha| = " + std::to_string(alpha) +
                              " derivatives of a non-polynomial symbol");
      }
      Component dp = *cp;
      for (int k = 0; k < alpha && !dp.is_zero(); ++k) dp = d_xi(dp, Index::label(kSlotBase + k));
      if (dp.is_zero()) continue;
      Component dq = *cq;
      for (int k = 0; k < alpha; ++k) dq = d_x(dq, Index::label(kSlotBase + k));
      // (-i)^alpha / alpha!
      Gaussian f(1);
      long fact = 1;
      for (int k = 0; k < alpha; ++k) {
        f *= -Gaussian::i();
        fact *= k + 1;
      }
      f /= Gaussian(fact);
      Contribution c{lo, alpha, ro, product(dp, dq, Coeff(f))};
      for (const SymbolTerm& t : c.value.terms) {
        if (t.homogeneity() != Affine{p.m_coef() + q.m_coef(), target}) {
          throw ContractViolation("inhomogeneous composition term " + t.to_string());
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

PDOSymbol compose(const PDOSymbol& p, const PDOSymbol& q, const std::vector<int>& targets) {
  bool covered = false;
  if (p.complete() && q.complete() && !p.empty() && !q.empty() && !targets.empty()) {
    const int low = p.lowest() + q.lowest();
    covered = true;
    for (int k = low; k <= p.top() + q.top(); ++k) {
      covered = covered && std::find(targets.begin(), targets.end(), k) != targets.end();
    }
  }
  PDOSymbol out(p.m_coef() + q.m_coef(), covered);
  for (int t : targets) {
    Component c;
    for (Contribution& piece : compose_contributions(p, q, t)) c.append(piece.value);
    out.set(t, std::move(c));
  }
  return out;
}

Component simplify(const Component& c) {
  std::vector<std::pair<std::string, Affine>> order;
  std::map<std::pair<std::string, Affine>, clifford::CliffordPoly> groups;
  for (const SymbolTerm& t : c.terms) {
    auto key = std::make_pair(t.tag, t.norm);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.add(t.body);
  }
  Component out;
  out.x_exact = c.x_exact;
  for (const auto& key : order) {
    const clifford::CliffordPoly simplified = clifford::simplify(groups.at(key));
    for (const CliffTerm& b : simplified.terms()) {
      out.terms.push_back({b, key.second, key.first});
    }
  }
  return out;
}

}  // namespace wres::pdo
