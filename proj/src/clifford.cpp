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

#include "wres/clifford.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "wres/error.hpp"

namespace wres::clifford {

using tensor::Factor;
using tensor::TensorSum;
using tensor::TensorTerm;

std::string Generator::to_string() const {
  std::string name = family == Family::C ? "c" : "chat";
  return index.is_concrete() ? name + std::to_string(index.value()) : name + "_" + index.to_string();
}

std::string to_string(const CliffordWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Generator& g : w) s += (s.empty() ? "" : " ") + g.to_string();
  return s;
}

bool is_canonical(const CliffordWord& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (!(w[k] < w[k + 1])) return false;
  }
  return true;
}

CliffordWord parse_word(std::string_view text) {
  CliffordWord w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    Family family;
    if (text.substr(pos, 4) == "chat") {
      family = Family::CHat;
      pos += 4;
    } else if (text[pos] == 'c') {
      family = Family::C;
      pos += 1;
    } else {
      throw ParseError("expected generator 'c<k>' or 'chat<k>'", start);
    }
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError("expected frame index after generator name", digits);
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("unexpected character", pos);
    }
    int value = std::stoi(std::string(text.substr(digits, pos - digits)));
    if (value < 1) throw ParseError("frame indices start at 1", digits);
    w.push_back({family, Index::concrete(value)});
  }
  return w;
}

std::vector<Index> CliffTerm::word_indices() const {
  std::vector<Index> out;
  out.reserve(word.size());
  for (const Generator& g : word) out.push_back(g.index);
  return out;
}

CliffordPoly CliffordPoly::identity() { return scalar(TensorTerm(Coeff(1))); }

CliffordPoly CliffordPoly::scalar(TensorTerm t) {
  CliffordPoly p;
  p.add({std::move(t), {}});
  return p;
}

CliffordPoly CliffordPoly::word(CliffordWord w) {
  CliffordPoly p;
  p.add({TensorTerm(Coeff(1)), std::move(w)});
  return p;
}

CliffordPoly CliffordPoly::generator(Family f, Index i) { return word({{f, i}}); }

CliffordPoly CliffordPoly::vector(Family f, tensor::Field field) {
  Index a = Index::label(1);
  CliffordPoly p;
  p.add({TensorTerm(Coeff(1), {Factor::vec(field, a)}), {{f, a}}});
  return p;
}

CliffordPoly CliffordPoly::xi(Family f) {
  Index a = Index::label(1);
  CliffordPoly p;
  p.add({TensorTerm(Coeff(1), {Factor::xi(a)}), {{f, a}}});
  return p;
}

void CliffordPoly::add(CliffTerm t) {
  if (!t.coeff.coeff.is_zero()) terms_.push_back(std::move(t));
}

CliffordPoly& CliffordPoly::operator+=(const CliffordPoly& o) {
  for (const CliffTerm& t : o.terms_) add(t);
  return *this;
}

CliffordPoly& CliffordPoly::operator-=(const CliffordPoly& o) {
  for (CliffTerm t : o.terms_) {
    t.coeff.coeff = -t.coeff.coeff;
    add(std::move(t));
  }
  return *this;
}

CliffordPoly& CliffordPoly::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (CliffTerm& t : terms_) t.coeff.coeff *= c;
  return *this;
}

CliffordPoly& CliffordPoly::operator*=(const TensorTerm& s) {
  *this = multiply(*this, CliffordPoly::scalar(s));
  return *this;
}

std::string CliffordPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const CliffTerm& t : terms_) {
    if (!s.empty()) s += " + ";
    s += t.coeff.to_string() + " [" + clifford::to_string(t.word) + "]";
  }
  return s;
}

namespace {

std::map<Index, int> counts_of(const CliffTerm& t) {
  auto ext = t.word_indices();
  return tensor::label_counts(t.coeff, ext);
}

std::int32_t max_id(const std::map<Index, int>& counts) {
  std::int32_t m = 0;
  for (const auto& [i, c] : counts) m = std::max(m, i.id);
  return m;
}

void relabel_term(CliffTerm& t, const LabelMap& map) {
  tensor::relabel(t.coeff, map);
  for (Generator& g : t.word) {
    auto it = map.find(g.index);
    if (it != map.end()) g.index = it->second;
  }
}

// Summed labels of t that clash with a label in avoid are moved to fresh ids.
void rename_apart(CliffTerm& t, const std::map<Index, int>& avoid, std::int32_t& next) {
  LabelMap map;
  for (const auto& [i, c] : counts_of(t)) {
    if (i.is_abstract() && c == 2 && avoid.contains(i)) map[i] = Index::label(++next);
  }
  if (!map.empty()) relabel_term(t, map);
}

Factor contraction(Index a, Index b) { return Factor::delta(a, b); }

// 0 when the delta between two concrete indices vanishes.
int concrete_delta(Index a, Index b) {
  if (a.is_concrete() && b.is_concrete()) return a == b ? 1 : 0;
  return -1;
}

std::vector<Factor> sorted_factors(std::vector<Factor> f) {
  std::sort(f.begin(), f.end());
  return f;
}

CliffordPoly merged(const std::vector<CliffTerm>& terms) {
  std::map<std::pair<std::vector<Factor>, CliffordWord>, Coeff> acc;
  std::vector<std::pair<std::vector<Factor>, CliffordWord>> order;
  for (const CliffTerm& t : terms) {
    auto key = std::make_pair(sorted_factors(t.coeff.factors), t.word);
    auto [it, inserted] = acc.try_emplace(key, t.coeff.coeff);
    if (inserted) {
      order.push_back(std::move(key));
    } else {
      it->second += t.coeff.coeff;
    }
  }
  CliffordPoly out;
  for (auto& key : order) {
    const Coeff& c = acc.at(key);
    if (!c.is_zero()) out.add({TensorTerm(c, key.first), key.second});
  }
  return out;
}

}  // namespace

CliffTerm multiply(const CliffTerm& a, const CliffTerm& b) {
  auto ca = counts_of(a);
  auto cb = counts_of(b);
  std::int32_t next = std::max(max_id(ca), max_id(cb));
  CliffTerm left = a;
  CliffTerm right = b;
  rename_apart(right, ca, next);
  rename_apart(left, counts_of(right), next);
  CliffTerm out;
  out.coeff = left.coeff;
  out.coeff *= right.coeff;
  out.word = std::move(left.word);
  out.word.insert(out.word.end(), right.word.begin(), right.word.end());
  return out;
}

CliffordPoly multiply(const CliffordPoly& a, const CliffordPoly& b) {
  CliffordPoly out;
  for (const CliffTerm& x : a.terms()) {
    for (const CliffTerm& y : b.terms()) out.add(multiply(x, y));
  }
  return out;
}

CliffordPoly normal_order(const CliffTerm& t) {
  std::vector<CliffTerm> done;
  std::vector<CliffTerm> work{t};
  while (!work.empty()) {
    CliffTerm cur = std::move(work.back());
    work.pop_back();
    if (cur.coeff.coeff.is_zero()) continue;
    auto& w = cur.word;
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] < w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      done.push_back(std::move(cur));
      continue;
    }
    const Generator g1 = w[k];
    const Generator g2 = w[k + 1];
    if (g1.family != g2.family) {
      std::swap(w[k], w[k + 1]);
      cur.coeff.coeff = -cur.coeff.coeff;
      work.push_back(std::move(cur));
      continue;
    }
    const long square = g1.family == Family::C ? -1 : 1;
    CliffTerm reduced = cur;
    reduced.word.erase(reduced.word.begin() + static_cast<long>(k),
                       reduced.word.begin() + static_cast<long>(k) + 2);
    if (g1.index == g2.index) {
      reduced.coeff.coeff *= Coeff(square);
      if (g1.index.is_abstract()) reduced.coeff.factors.push_back(contraction(g1.index, g1.index));
      work.push_back(std::move(reduced));
      continue;
    }
    std::swap(w[k], w[k + 1]);
    cur.coeff.coeff = -cur.coeff.coeff;
    work.push_back(std::move(cur));
    int d = concrete_delta(g1.index, g2.index);
    if (d != 0) {
      reduced.coeff.coeff *= Coeff(2 * square);
      if (d < 0) reduced.coeff.factors.push_back(contraction(g1.index, g2.index));
      work.push_back(std::move(reduced));
    }
  }
  return merged(done);
}

CliffordPoly normal_order(const CliffordWord& w) {
  return normal_order(CliffTerm{TensorTerm(Coeff(1)), w});
}

CliffordPoly normal_order(const CliffordPoly& p) {
  std::vector<CliffTerm> all;
  for (const CliffTerm& t : p.terms()) {
    CliffordPoly q = normal_order(t);
    all.insert(all.end(), q.terms().begin(), q.terms().end());
  }
  return merged(all);
}

TensorSum scalar_part(const CliffordWord& w) {
  if (w.empty()) return {TensorTerm(Coeff(1))};
  const Family family = w.front().family;
  for (const Generator& g : w) {
    if (g.family != family) throw ContractViolation("scalar_part of mixed word " + to_string(w));
  }
  if (w.size() % 2 == 1) return {};
  const long square = family == Family::C ? -1 : 1;
  TensorSum out;
  for (std::size_t j = 1; j < w.size(); ++j) {
    int d = concrete_delta(w[0].index, w[j].index);
    if (d == 0) continue;
    CliffordWord rest;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (k != j) rest.push_back(w[k]);
    }
    long sign = (j % 2 == 1 ? 1 : -1) * square;
    for (TensorTerm t : scalar_part(rest)) {
      t.coeff *= Coeff(sign);
      if (d < 0) t.factors.push_back(Factor::delta(w[0].index, w[j].index));
      out.push_back(std::move(t));
    }
  }
  return out;
}

TensorSum trace(const CliffTerm& t) {
  CliffordWord cw;
  CliffordWord hw;
  long crossings = 0;
  for (const Generator& g : t.word) {
    if (g.family == Family::C) {
      crossings += static_cast<long>(hw.size());
      cw.push_back(g);
    } else {
      hw.push_back(g);
    }
  }
  if (cw.size() % 2 == 1 || hw.size() % 2 == 1) return {};
  TensorSum sc = scalar_part(cw);
  TensorSum sh = scalar_part(hw);
  TensorSum out;
  for (const TensorTerm& a : sc) {
    for (const TensorTerm& b : sh) {
      TensorTerm r = t.coeff;
      r *= a;
      r *= b;
      if (crossings % 2 == 1) r.coeff = -r.coeff;
      r.factors.push_back(Factor::trid());
      out.push_back(std::move(r));
    }
  }
  return out;
}

TensorSum trace(const CliffordPoly& p) {
  TensorSum out;
  for (const CliffTerm& t : p.terms()) {
    TensorSum s = trace(t);
    out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  return out;
}

CliffordPoly simplify(const CliffordPoly& p) {
  CliffordPoly cur = normal_order(p);
  for (int round = 0; round < 16; ++round) {
    std::vector<CliffTerm> next;
    bool stable = true;
    for (const CliffTerm& t : cur.terms()) {
      std::vector<Index> ext = t.word_indices();
      auto canon = tensor::canonicalize(t.coeff, &ext);
      if (!canon) {
        stable = false;
        continue;
      }
      CliffTerm r{std::move(*canon), t.word};
      for (std::size_t k = 0; k < ext.size(); ++k) r.word[k].index = ext[k];
      if (!is_canonical(r.word)) stable = false;
      if (r.coeff.factors != sorted_factors(t.coeff.factors) || r.word != t.word) stable = false;
      next.push_back(std::move(r));
    }
    CliffordPoly merged_next = merged(next);
    cur = normal_order(merged_next);
    if (stable) break;
  }
  return cur;
}

bool equivalent(const CliffordPoly& a, const CliffordPoly& b) { return simplify(a - b).is_zero(); }

}  // namespace wres::clifford
