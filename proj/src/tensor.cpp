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

#include "wres/tensor.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "wres/error.hpp"

namespace wres::tensor {

std::string field_name(Field f) {
  switch (f) {
    case Field::U: return "u";
    case Field::W: return "w";
    case Field::V: return "V";
    case Field::None: break;
  }
  return "?";
}

int Factor::arity() const {
  switch (kind) {
    case Kind::Riemann: return 4;
    case Kind::Delta:
    case Kind::Ricci:
    case Kind::DVec: return 2;
    case Kind::Vec:
    case Kind::Xi:
    case Kind::Coord: return 1;
    default: return 0;
  }
}

std::string Factor::to_string() const {
  auto list = [this] {
    std::string s;
    for (Index i : indices()) s += (s.empty() ? "" : ",") + i.to_string();
    return s;
  };
  switch (kind) {
    case Kind::Delta: return "delta(" + list() + ")";
    case Kind::Riemann: return "R(" + list() + ")";
    case Kind::Ricci: return "Ric(" + list() + ")";
    case Kind::Scalar: return "s";
    case Kind::Vec: return field_name(field) + "(" + list() + ")";
    case Kind::DVec: return "d" + field_name(field) + "(" + list() + ")";
    case Kind::Xi: return "xi(" + list() + ")";
    case Kind::Coord: return "x(" + list() + ")";
    case Kind::NormSq: return "|" + field_name(field) + "|^2";
    case Kind::TrId: return "TrId";
    case Kind::VolSphere: return "Vol";
  }
  return "?";
}

TensorTerm& TensorTerm::operator*=(const TensorTerm& o) {
  coeff *= o.coeff;
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

std::string TensorTerm::to_string() const {
  std::string s = "(" + coeff.to_string() + ")";
  for (const Factor& f : factors) s += "*" + f.to_string();
  return s;
}

std::map<Index, int> label_counts(const TensorTerm& t, std::span<const Index> external) {
  std::map<Index, int> counts;
  for (const Factor& f : t.factors) {
    for (Index i : f.indices()) ++counts[i];
  }
  for (Index i : external) ++counts[i];
  return counts;
}

std::int32_t max_label(const TensorTerm& t) {
  std::int32_t m = 0;
  for (const Factor& f : t.factors) {
    for (Index i : f.indices()) m = std::max(m, i.id);
  }
  return m;
}

void relabel(TensorTerm& t, const LabelMap& map) {
  for (Factor& f : t.factors) {
    for (Index& i : f.indices()) {
      auto it = map.find(i);
      if (it != map.end()) i = it->second;
    }
  }
}

namespace {

bool summed(const std::map<Index, int>& counts, Index i) {
  if (!i.is_abstract()) return false;
  auto it = counts.find(i);
  return it != counts.end() && it->second == 2;
}

void replace_label(TensorTerm& t, std::vector<Index>* external, Index from, Index to) {
  for (Factor& f : t.factors) {
    for (Index& i : f.indices()) {
      if (i == from) i = to;
    }
  }
  if (external != nullptr) {
    for (Index& i : *external) {
      if (i == from) i = to;
    }
  }
}

// Pair symmetries of a single factor; returns the sign, 0 when the factor
// vanishes identically.
int normalize_factor(Factor& f) {
  auto& x = f.idx;
  switch (f.kind) {
    case Kind::Riemann: {
      if (x[0] == x[1] || x[2] == x[3]) return 0;
      int sign = 1;
      if (x[1] < x[0]) {
        std::swap(x[0], x[1]);
        sign = -sign;
      }
      if (x[3] < x[2]) {
        std::swap(x[2], x[3]);
        sign = -sign;
      }
      if (std::pair(x[2], x[3]) < std::pair(x[0], x[1])) {
        std::swap(x[0], x[2]);
        std::swap(x[1], x[3]);
      }
      return sign;
    }
    case Kind::Delta:
    case Kind::Ricci:
      if (x[1] < x[0]) std::swap(x[0], x[1]);
      return 1;
    default:
      return 1;
  }
}

// Contraction rules; returns false when the term vanishes.
bool apply_rules(TensorTerm& t) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < t.factors.size() && !changed; ++k) {
      Factor& f = t.factors[k];
      auto& x = f.idx;
      if (f.kind == Kind::Riemann) {
        if (x[0] == x[1] || x[2] == x[3]) return false;
        for (int i = 0; i < 2 && !changed; ++i) {
          for (int j = 2; j < 4 && !changed; ++j) {
            if (x[i] != x[j] || !x[i].is_abstract()) continue;
            int sign = (i == 1 ? -1 : 1) * (j == 3 ? -1 : 1);
            Index a = x[1 - i];
            Index b = x[5 - j];
            f = Factor::ricci(a, b);
            if (sign < 0) t.coeff = -t.coeff;
            changed = true;
          }
        }
      } else if (f.kind == Kind::Ricci && x[0] == x[1] && x[0].is_abstract()) {
        f = Factor::scalar();
        changed = true;
      } else if (f.kind == Kind::Vec && x[0].is_abstract()) {
        for (std::size_t l = k + 1; l < t.factors.size(); ++l) {
          const Factor& g = t.factors[l];
          if (g.kind == Kind::Vec && g.field == f.field && g.idx[0] == x[0]) {
            Field field = f.field;
            t.factors.erase(t.factors.begin() + static_cast<long>(l));
            t.factors[k] = Factor::norm_sq(field);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return true;
}

struct Candidate {
  std::vector<Factor> factors;
  int sign = 0;
};

Candidate apply_naming(const TensorTerm& t, const LabelMap& map) {
  Candidate c;
  c.factors = t.factors;
  c.sign = 1;
  for (Factor& f : c.factors) {
    for (Index& i : f.indices()) {
      auto it = map.find(i);
      if (it != map.end()) i = it->second;
    }
    c.sign *= normalize_factor(f);
  }
  std::sort(c.factors.begin(), c.factors.end());
  return c;
}

constexpr std::size_t kBruteForceLimit = 7;

}  // namespace

bool contract_deltas(TensorTerm& t, std::vector<Index>* external) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::span<const Index> ext;
    if (external != nullptr) ext = *external;
    auto counts = label_counts(t, ext);
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      const Factor& f = t.factors[k];
      if (f.kind != Kind::Delta) continue;
      Index a = f.idx[0];
      Index b = f.idx[1];
      auto erase = [&] { t.factors.erase(t.factors.begin() + static_cast<long>(k)); };
      if (a == b) {
        if (a.is_abstract()) {
          t.coeff *= Coeff::dimension();
        }
        erase();
        changed = true;
        break;
      }
      if (a.is_concrete() && b.is_concrete()) return false;
      Index from;
      Index to;
      if (summed(counts, a)) {
        from = a;
        to = b;
      } else if (summed(counts, b)) {
        from = b;
        to = a;
      } else {
        continue;
      }
      erase();
      replace_label(t, external, from, to);
      changed = true;
      break;
    }
  }
  return !t.coeff.is_zero();
}

TensorTerm contract_deltas(TensorTerm t) {
  if (!contract_deltas(t, nullptr)) return TensorTerm(Coeff(0));
  return t;
}

std::optional<TensorTerm> canonicalize(TensorTerm t, std::vector<Index>* external) {
  if (t.coeff.is_zero()) return std::nullopt;
  if (!contract_deltas(t, external)) return std::nullopt;
  if (!apply_rules(t)) return std::nullopt;

  std::span<const Index> ext;
  if (external != nullptr) ext = *external;
  auto counts = label_counts(t, ext);
  std::int32_t base = 0;
  for (const auto& [label, count] : counts) {
    if (!label.is_abstract()) continue;
    if (count > 2) {
      throw ContractViolation("label " + label.to_string() + " occurs " + std::to_string(count) +
                              " times in " + t.to_string());
    }
    if (count == 1) base = std::max(base, label.id);
  }

  LabelMap naming;
  std::int32_t next = base;
  for (Index i : ext) {
    if (summed(counts, i) && !naming.contains(i)) naming[i] = Index::label(++next);
  }
  std::vector<Index> inner;
  for (const auto& [label, count] : counts) {
    if (count == 2 && label.is_abstract() && !naming.contains(label)) inner.push_back(label);
  }

  Candidate best;
  if (inner.size() <= kBruteForceLimit) {
    std::vector<std::int32_t> names(inner.size());
    std::iota(names.begin(), names.end(), next + 1);
    bool found = false;
    do {
      LabelMap map = naming;
      for (std::size_t k = 0; k < inner.size(); ++k) map[inner[k]] = Index::label(names[k]);
      Candidate c = apply_naming(t, map);
      if (c.sign == 0) return std::nullopt;
      if (!found || c.factors < best.factors) {
        best = std::move(c);
        found = true;
      } else if (c.factors == best.factors && c.sign != best.sign) {
        return std::nullopt;
      }
    } while (std::next_permutation(names.begin(), names.end()));
  } else {
    // Too many summed labels for exhaustive search: name them by first
    // occurrence in the factor list sorted with summed labels masked.
    std::vector<Factor> masked = t.factors;
    for (Factor& f : masked) {
      for (Index& i : f.indices()) {
        if (summed(counts, i) && !naming.contains(i)) i = Index::label(INT32_MAX);
      }
    }
    std::vector<std::size_t> order(t.factors.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return masked[a] < masked[b]; });
    LabelMap map = naming;
    for (std::size_t k : order) {
      for (Index i : t.factors[k].indices()) {
        if (summed(counts, i) && !map.contains(i)) map[i] = Index::label(++next);
      }
    }
    best = apply_naming(t, map);
    if (best.sign == 0) return std::nullopt;
  }

  if (external != nullptr) {
    for (Index& i : *external) {
      auto it = naming.find(i);
      if (it != naming.end()) i = it->second;
    }
  }
  TensorTerm out(best.sign < 0 ? -t.coeff : t.coeff, std::move(best.factors));
  return out;
}

TensorSum bianchi_reduce(const TensorSum& terms) {
  TensorSum out;
  for (const TensorTerm& term : terms) {
    TensorSum work{term};
    for (std::size_t k = 0; k < term.factors.size(); ++k) {
      const Factor& f = term.factors[k];
      if (f.kind != Kind::Riemann) continue;
      std::array<Index, 4> s = f.idx;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
      Factor probe = f;
      if (normalize_factor(probe) != 1 || probe != f) continue;
      if (f.idx[1] != s[3]) continue;
      // R_{adbc} = R_{acbd} - R_{abcd}
      TensorSum next;
      for (TensorTerm& w : work) {
        TensorTerm first = w;
        first.factors[k] = Factor::riemann(s[0], s[2], s[1], s[3]);
        TensorTerm second = w;
        second.factors[k] = Factor::riemann(s[0], s[1], s[2], s[3]);
        second.coeff = -second.coeff;
        next.push_back(std::move(first));
        next.push_back(std::move(second));
      }
      work = std::move(next);
    }
    for (TensorTerm& w : work) {
      std::sort(w.factors.begin(), w.factors.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

TensorSum merge(TensorSum terms) {
  std::map<std::vector<Factor>, Coeff> acc;
  for (TensorTerm& t : terms) acc[std::move(t.factors)] += t.coeff;
  TensorSum out;
  for (auto& [factors, coeff] : acc) {
    if (!coeff.is_zero()) out.emplace_back(coeff, factors);
  }
  return out;
}

TensorSum simplify(const TensorSum& terms, bool bianchi) {
  TensorSum canon;
  canon.reserve(terms.size());
  for (const TensorTerm& t : terms) {
    if (auto c = canonicalize(t)) canon.push_back(std::move(*c));
  }
  canon = merge(std::move(canon));
  if (bianchi) canon = merge(bianchi_reduce(canon));
  return canon;
}

std::string InvariantMonomial::to_string() const {
  std::string s = atoms;
  for (int k = 0; k < trid; ++k) s += "*TrId";
  for (int k = 0; k < vol; ++k) s += "*Vol";
  return s;
}

void ScalarInvariantExpr::add(const InvariantMonomial& mono, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarInvariantExpr& ScalarInvariantExpr::operator+=(const ScalarInvariantExpr& o) {
  for (const auto& [mono, c] : o.terms_) add(mono, c);
  residuals_.insert(residuals_.end(), o.residuals_.begin(), o.residuals_.end());
  return *this;
}

Coeff ScalarInvariantExpr::coefficient(const std::string& atoms, int trid, int vol) const {
  auto it = terms_.find(InvariantMonomial{atoms, trid, vol});
  return it == terms_.end() ? Coeff(0) : it->second;
}

bool ScalarInvariantExpr::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.is_real(); });
}

ScalarInvariantExpr ScalarInvariantExpr::without_atom(const std::string& needle) const {
  ScalarInvariantExpr out;
  for (const auto& [mono, c] : terms_) {
    if (mono.atoms.find(needle) == std::string::npos) out.add(mono, c);
  }
  out.residuals_ = residuals_;
  return out;
}

std::string ScalarInvariantExpr::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << mono.to_string();
  }
  for (const TensorTerm& r : residuals_) {
    if (!first) out << " + ";
    first = false;
    out << "[residual " << r.to_string() << "]";
  }
  return out.str();
}

namespace {

int atom_rank(const std::string& a) {
  if (a == "s") return 0;
  if (a.front() == '|') return 1;
  if (a.starts_with("Ric")) return 2;
  return 3;
}

std::string pair_atom(const char* name, Field a, Field b) {
  std::string x = field_name(a);
  std::string y = field_name(b);
  if (y < x) std::swap(x, y);
  // Lowercase fields first: g(u,w), g(V,u) reads worse than g(u,V).
  if (x == "V" && (y == "u" || y == "w")) std::swap(x, y);
  return std::string(name) + "(" + x + "," + y + ")";
}

}  // namespace

ScalarInvariantExpr collect(const TensorSum& terms) {
  ScalarInvariantExpr expr;
  for (const TensorTerm& t : terms) {
    if (t.coeff.is_zero()) continue;
    for (const auto& [label, count] : label_counts(t)) {
      if (label.is_concrete()) {
        throw ContractViolation("concrete frame index in invariant term " + t.to_string());
      }
      if (count != 2) throw ContractViolation("free frame index in " + t.to_string());
    }
    InvariantMonomial mono;
    std::vector<std::string> atoms;
    std::vector<bool> used(t.factors.size(), false);
    bool residual = false;
    auto find_vec = [&](Index label, std::size_t skip) -> std::optional<std::size_t> {
      for (std::size_t k = 0; k < t.factors.size(); ++k) {
        if (k == skip || used[k]) continue;
        const Factor& g = t.factors[k];
        if (g.kind == Kind::Vec && g.idx[0] == label) return k;
      }
      return std::nullopt;
    };
    for (std::size_t k = 0; k < t.factors.size() && !residual; ++k) {
      const Factor& f = t.factors[k];
      switch (f.kind) {
        case Kind::TrId: ++mono.trid; used[k] = true; break;
        case Kind::VolSphere: ++mono.vol; used[k] = true; break;
        case Kind::Scalar: atoms.emplace_back("s"); used[k] = true; break;
        case Kind::NormSq:
          atoms.push_back("|" + field_name(f.field) + "|^2");
          used[k] = true;
          break;
        case Kind::Ricci: {
          auto a = find_vec(f.idx[0], k);
          if (!a) { residual = true; break; }
          used[*a] = true;
          auto b = find_vec(f.idx[1], k);
          if (!b) { residual = true; break; }
          used[*b] = true;
          used[k] = true;
          atoms.push_back(pair_atom("Ric", t.factors[*a].field, t.factors[*b].field));
          break;
        }
        default: break;
      }
    }
    for (std::size_t k = 0; k < t.factors.size() && !residual; ++k) {
      if (used[k]) continue;
      const Factor& f = t.factors[k];
      if (f.kind != Kind::Vec) {
        residual = true;
        break;
      }
      used[k] = true;
      auto b = find_vec(f.idx[0], k);
      if (!b) { residual = true; break; }
      used[*b] = true;
      atoms.push_back(pair_atom("g", f.field, t.factors[*b].field));
    }
    if (residual) {
      expr.add_residual(t);
      continue;
    }
    std::sort(atoms.begin(), atoms.end(), [](const std::string& a, const std::string& b) {
      int ra = atom_rank(a);
      int rb = atom_rank(b);
      return ra != rb ? ra < rb : a < b;
    });
    std::string joined;
    for (const std::string& a : atoms) joined += (joined.empty() ? "" : "*") + a;
    mono.atoms = joined.empty() ? "1" : joined;
    expr.add(mono, t.coeff);
  }
  return expr;
}

}  // namespace wres::tensor
