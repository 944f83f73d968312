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

#include "wres/operators.hpp"

#include "wres/error.hpp"

namespace wres::operators {

using clifford::CliffordPoly;
using clifford::Family;
using pdo::Component;
using pdo::PDOSymbol;
using pdo::SymbolTerm;
using tensor::Factor;
using tensor::Field;
using tensor::TensorTerm;

namespace {

Index L(std::int32_t k) { return Index::label(k); }

CliffordPoly term(Coeff c, std::vector<Factor> factors, clifford::CliffordWord word = {}) {
  CliffordPoly p;
  p.add({TensorTerm(std::move(c), std::move(factors)), std::move(word)});
  return p;
}

clifford::Generator gen(Family f, std::int32_t k) { return {f, L(k)}; }

Coeff rational(long p, long q) { return Coeff(Gaussian(Rational(p, q))); }

CliffordPoly relabeled(const CliffordPoly& p, Index from, Index to) {
  CliffordPoly out;
  for (clifford::CliffTerm t : p.terms()) {
    tensor::relabel(t.coeff, {{from, to}});
    for (auto& g : t.word) {
      if (g.index == from) g.index = to;
    }
    out.add(std::move(t));
  }
  return out;
}

void append(Component& c, const CliffordPoly& body, const Coeff& coeff, Affine norm,
            const std::string& tag) {
  for (clifford::CliffTerm t : body.terms()) {
    t.coeff.coeff *= coeff;
    if (!t.coeff.coeff.is_zero()) c.terms.push_back({std::move(t), norm, tag});
  }
}

}  // namespace

CliffordPoly LaplaceData::T_ab_total() const {
  CliffordPoly p;
  for (const auto& [tag, poly] : T_ab) p += poly;
  return p;
}

CliffordPoly LaplaceData::E_total() const {
  CliffordPoly p;
  for (const auto& [tag, poly] : E) p += poly;
  return p;
}

LaplaceData build_laplace_data(const WittenOptions& options) {
  LaplaceData d;
  // T_ab = -1/8 R_{bats} c_s c_t + 1/8 R_{bats} chat_s chat_t
  const Factor r_bats = Factor::riemann(LaplaceData::b, LaplaceData::a, L(4), L(3));
  d.T_ab.emplace_back("Tab.c", term(rational(-1, 8), {r_bats}, {gen(Family::C, 3), gen(Family::C, 4)}));
  d.T_ab.emplace_back("Tab.hat",
                      term(rational(1, 8), {r_bats}, {gen(Family::CHat, 3), gen(Family::CHat, 4)}));
  // E = 1/8 R_ijkl chat_i chat_j c_k c_l + s/4 + sum c_i chat(nabla_i V) + |V|^2
  d.E.emplace_back("E.curv", term(rational(1, 8), {Factor::riemann(L(3), L(4), L(5), L(6))},
                                  {gen(Family::CHat, 3), gen(Family::CHat, 4), gen(Family::C, 5),
                                   gen(Family::C, 6)}));
  d.E.emplace_back("E.scal", term(rational(1, 4), {Factor::scalar()}));
  if (options.with_V) {
    d.E.emplace_back("E.dV", term(Coeff(1), {Factor::dvec(Field::V, L(3), L(4))},
                                  {gen(Family::C, 3), gen(Family::CHat, 4)}));
    d.E.emplace_back("E.V2", term(Coeff(1), {Factor::norm_sq(Field::V)}));
  }
  return d;
}

PDOSymbol parametrix_symbols(const LaplaceData& data, int power_offset) {
  if (power_offset != 0 && power_offset != 1) {
    throw DomainError("power_offset must be 0 or 1, got " + std::to_string(power_offset));
  }
  const int po = power_offset;
  const Coeff mt(Polynomial({Gaussian(-po), Gaussian(1)}));  // m - p
  const Coeff mt1 = mt + Coeff(1);
  const Coeff i = Coeff::i();
  const Affine n2{-2, 2 * po - 2};  // -2(m-p) - 2
  const Affine n4{-2, 2 * po - 4};
  const Index a = LaplaceData::a;
  const Index b = LaplaceData::b;

  auto xi = [](Index k) { return Factor::xi(k); };
  auto x = [](Index k) { return Factor::coord(k); };
  auto with = [](const CliffordPoly& p, std::vector<Factor> f) {
    return clifford::multiply(p, CliffordPoly::scalar(TensorTerm(Coeff(1), std::move(f))));
  };

  const CliffordPoly T_b = relabeled(data.T_a, a, b);

  Component top;
  top.x_exact = 2;
  append(top, term(Coeff(1), {xi(a), xi(a)}), Coeff(1), n2, "delta");
  append(top, term(Coeff(1), {Factor::riemann(a, L(3), b, L(4)), x(L(3)), x(L(4)), xi(a), xi(b)}),
         -mt * rational(1, 3), n2, "R.xx");

  Component mid;
  mid.x_exact = 1;
  append(mid, term(Coeff(1), {Factor::ricci(a, L(3)), x(L(3)), xi(a)}),
         Coeff(-2) * mt * i * rational(1, 3), n2, "ric");
  append(mid, with(data.T_a, {xi(a)}), Coeff(-2) * mt * i, n2, "T_a");
  for (const auto& [tag, poly] : data.T_ab) {
    append(mid, with(poly, {x(b), xi(a)}), Coeff(-2) * mt * i, n2, tag);
  }

  Component low;
  low.x_exact = 0;
  append(low, term(Coeff(1), {Factor::ricci(a, b), xi(a), xi(b)}), mt * mt1 * rational(1, 3), n4,
         "ric");
  append(low, with(clifford::multiply(data.T_a, T_b), {xi(a), xi(b)}), Coeff(-2) * mt * mt1, n4,
         "TT");
  append(low, clifford::multiply(data.T_a, data.T_a), mt, n2, "TaTa");
  for (const auto& [tag, poly] : data.T_ab) {
    const std::string suffix = tag.substr(tag.find('.'));
    append(low, relabeled(poly, b, a), -mt, n2, "Taa" + suffix);
  }
  for (const auto& [tag, poly] : data.T_ab) {
    append(low, with(poly, {xi(a), xi(b)}), Coeff(2) * mt * mt1, n4, tag);
  }
  for (const auto& [tag, poly] : data.E) append(low, poly, -mt, n2, tag);

  PDOSymbol s(-2, false);
  s.set(2 * po, std::move(top));
  s.set(2 * po - 1, std::move(mid));
  s.set(2 * po - 2, std::move(low));
  return s;
}

PDOSymbol symbol_of_D(const WittenOptions& options) {
  Component principal;
  append(principal, CliffordPoly::xi(Family::C), Coeff::i(), {}, "xi");

  Component zeroth;
  zeroth.x_exact = 1;
  // -1/4 omega_st(e_p) c_p c_s c_t with omega_st(e_p) = -1/2 R_{lpts} x^l
  const Factor r_lpts = Factor::riemann(L(1), L(2), L(4), L(3));
  append(zeroth, term(Coeff(1), {r_lpts, Factor::coord(L(1))},
                      {gen(Family::C, 2), gen(Family::C, 3), gen(Family::C, 4)}),
         rational(1, 8), {}, "omega.c");
  append(zeroth, term(Coeff(1), {r_lpts, Factor::coord(L(1))},
                      {gen(Family::C, 2), gen(Family::CHat, 3), gen(Family::CHat, 4)}),
         rational(-1, 8), {}, "omega.hat");
  if (options.with_V) append(zeroth, CliffordPoly::vector(Family::CHat, Field::V), Coeff(1), {}, "V");

  PDOSymbol s(0, true);
  s.set(1, std::move(principal));
  s.set(0, std::move(zeroth));
  return s;
}

namespace {

PDOSymbol left_multiply(const CliffordPoly& p, const PDOSymbol& s) {
  PDOSymbol out(s.m_coef(), s.complete());
  for (const auto& [k, c] : s.components()) {
    Component r;
    r.x_exact = c.x_exact;
    for (const SymbolTerm& t : c.terms) {
      for (const auto& pt : p.terms()) {
        r.terms.push_back({clifford::multiply(pt, t.body), t.norm, t.tag});
      }
    }
    out.set(k, std::move(r));
  }
  return out;
}

}  // namespace

PDOSymbol symbol_of_A(const WittenOptions& options) {
  return left_multiply(CliffordPoly::vector(Family::C, Field::U), symbol_of_D(options));
}

PDOSymbol symbol_of_B(const WittenOptions& options) {
  return left_multiply(CliffordPoly::vector(Family::C, Field::W), symbol_of_D(options));
}

PDOSymbol multiplication_symbol(const CliffordPoly& p, const std::string& tag) {
  Component c;
  append(c, p, Coeff(1), {}, tag);
  PDOSymbol s(0, true);
  s.set(0, std::move(c));
  return s;
}

}  // namespace wres::operators
