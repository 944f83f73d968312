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

#include "wres/residue.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <thread>

#include "wres/clifford.hpp"
#include "wres/error.hpp"
#include "wres/sphere.hpp"

namespace wres::residue {

using clifford::CliffordPoly;
using clifford::Family;
using pdo::Component;
using pdo::SymbolTerm;
using tensor::Field;
using tensor::ScalarInvariantExpr;

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("WRES_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 256) {
      throw ConfigError(std::string("WRES_WORKERS must be an integer in 1..256, got '") + env + "'");
    }
    return static_cast<int>(v);
  }
  return 1;
}

ScalarInvariantExpr wres_density(const std::vector<SymbolTerm>& terms, bool bianchi) {
  tensor::TensorSum integrand;
  for (const SymbolTerm& t : terms) {
    if (t.x_degree() != 0) {
      throw ContractViolation("density of a term not evaluated at the base point: " + t.to_string());
    }
    for (const tensor::TensorTerm& tr : clifford::trace(t.body)) {
      tensor::TensorSum s = sphere::integrate_xi(tr);
      integrand.insert(integrand.end(), std::make_move_iterator(s.begin()),
                       std::make_move_iterator(s.end()));
    }
  }
  ScalarInvariantExpr expr = tensor::collect(tensor::simplify(integrand, bianchi));
  if (!expr.residuals().empty()) {
    throw ContractViolation("density has terms outside the invariant atoms: " +
                            expr.residuals().front().to_string());
  }
  if (!expr.is_real()) throw ContractViolation("density is not real: " + expr.to_string());
  return expr;
}

ScalarInvariantExpr wres_density(const Component& c, bool bianchi) {
  return wres_density(pdo::evaluate_at_origin(c).terms, bianchi);
}

namespace {

pdo::PDOSymbol uw_symbol() {
  CliffordPoly uw = clifford::multiply(CliffordPoly::vector(Family::C, Field::U),
                                       CliffordPoly::vector(Family::C, Field::W));
  return operators::multiplication_symbol(uw, "cw");
}

std::string right_tag(const std::string& tag) { return tag.substr(tag.rfind('|') + 1); }

std::string left_tag(const std::string& tag) { return tag.substr(0, tag.find('|')); }

// Runs the jobs on a small pool; results are stored by job index so the
// assembly order does not depend on scheduling.
std::vector<ScalarInvariantExpr> run_jobs(const std::vector<std::function<ScalarInvariantExpr()>>& jobs,
                                          int workers) {
  std::vector<ScalarInvariantExpr> results(jobs.size());
  if (workers <= 1 || jobs.size() <= 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) results[k] = jobs[k]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) results[k] = jobs[k]();
  };
  std::vector<std::future<void>> pool;
  const int n = std::min<int>(workers, static_cast<int>(jobs.size()));
  for (int w = 0; w < n; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return results;
}

struct Group {
  std::string label;
  std::vector<SymbolTerm> terms;
};

// Splits the terms of c by a key derived from the tag. Keys mapped to an
// empty label are collected under must_vanish.
void split(const Component& c, const std::function<std::string(const std::string&)>& key,
           const std::vector<std::pair<std::string, std::string>>& labels, std::vector<Group>& out,
           std::vector<SymbolTerm>& must_vanish) {
  std::size_t first = out.size();
  for (const auto& [k, label] : labels) out.push_back({label, {}});
  for (const SymbolTerm& t : c.terms) {
    std::string k = key(t.tag);
    auto it = std::find_if(labels.begin(), labels.end(), [&](const auto& kv) { return kv.first == k; });
    if (it == labels.end()) {
      must_vanish.push_back(t);
    } else {
      out[first + static_cast<std::size_t>(it - labels.begin())].terms.push_back(t);
    }
  }
}

}  // namespace

ScalarInvariantExpr compute_metric_functional(const Options& options) {
  auto data = operators::build_laplace_data({options.with_V});
  auto q = operators::parametrix_symbols(data, 0);
  auto sym = pdo::compose(uw_symbol(), q, {0});
  return wres_density(*sym.find(0), options.bianchi);
}

std::string sigma0_piece(const std::string& tag) {
  static const std::map<std::string, std::string> pieces = {
      {"xi|omega.c", "A"}, {"xi|omega.hat", "B"}, {"xi|V/dW", "C"}, {"xi|V/dV", "D"}, {"V|V", "E"}};
  auto it = pieces.find(tag);
  return it == pieces.end() ? std::string() : it->second;
}

const std::vector<std::string>& TermLedger::all_labels() {
  static const std::vector<std::string> labels = {
      "I-1",    "I-2",    "I-3",    "I-4",    "I-5",    "I-6",    "I-7",    "S1",
      "II-1",   "II-1-A", "II-1-B", "II-1-C", "II-1-D", "II-1-E", "II-2",   "II-3",
      "II-3-A", "II-3-B", "II-3-C", "II-3-D", "II-3-E", "II-3-F", "II-3-G", "II-4",
      "II-4-A", "II-4-B", "II-4-C", "II-5",   "II-6",   "S2",     "einstein", "metric"};
  return labels;
}

bool TermLedger::is_known(const std::string& label) {
  const auto& all = all_labels();
  return std::find(all.begin(), all.end(), label) != all.end();
}

std::string TermLedger::parent(const std::string& label) {
  if (label == "S1" || label == "S2") return "einstein";
  if (label.starts_with("II-")) return label.size() > 4 ? label.substr(0, 4) : "S2";
  if (label.starts_with("I-")) return "S1";
  return "";
}

std::vector<std::string> TermLedger::children(const std::string& label) {
  std::vector<std::string> out;
  for (const std::string& l : all_labels()) {
    if (parent(l) == label) out.push_back(l);
  }
  return out;
}

void TermLedger::set(const std::string& label, ScalarInvariantExpr value) {
  if (!is_known(label)) throw ContractViolation("unknown ledger label " + label);
  entries_[label] = std::move(value);
}

const ScalarInvariantExpr& TermLedger::at(const std::string& label) const {
  auto it = entries_.find(label);
  if (it == entries_.end()) throw ContractViolation("ledger has no entry " + label);
  return it->second;
}

std::vector<std::string> TermLedger::labels() const {
  std::vector<std::string> out;
  for (const std::string& l : all_labels()) {
    if (entries_.contains(l)) out.push_back(l);
  }
  return out;
}

TermLedger compute_einstein_functional(const Options& options) {
  const auto data = operators::build_laplace_data({options.with_V});
  std::vector<Group> groups;
  std::vector<SymbolTerm> must_vanish;

  // Part I: sigma_{-2m}(c(u)c(w) D^{-2m+2}).
  auto part_one = pdo::compose(uw_symbol(), operators::parametrix_symbols(data, 1), {0});
  split(pdo::evaluate_at_origin(*part_one.find(0)), right_tag,
        {{"ric", "I-1"}, {"Tab.c", "I-2"}, {"Tab.hat", "I-3"}, {"E.curv", "I-4"},
         {"E.scal", "I-5"}, {"E.dV", "I-6"}, {"E.V2", "I-7"}},
        groups, must_vanish);

  // Part II: sigma_{-2m}(AB D^{-2m}) with sigma(AB) taken at the base point.
  auto ab = pdo::evaluate_at_origin(
      pdo::compose(operators::symbol_of_A({options.with_V}), operators::symbol_of_B({options.with_V}),
                   {2, 1, 0}));
  pdo::PDOSymbol ab_tagged(ab.m_coef(), ab.complete());
  for (const auto& [k, c] : ab.components()) {
    Component r = c;
    if (k == 0) {
      for (SymbolTerm& t : r.terms) {
        std::string piece = sigma0_piece(t.tag);
        if (piece.empty()) throw ContractViolation("unexpected sigma_0(AB) piece " + t.to_string());
        t.tag = piece;
      }
    }
    ab_tagged.set(k, std::move(r));
  }
  auto q = operators::parametrix_symbols(data, 0);
  std::vector<std::string> totals_two;
  for (pdo::Contribution& piece : pdo::compose_contributions(ab_tagged, q, 0)) {
    const int l = -piece.right;
    std::string label;
    if (piece.left == 0 && piece.alpha == 0 && l == 0) label = "II-1";
    if (piece.left == 1 && piece.alpha == 0 && l == 1) label = "II-2";
    if (piece.left == 2 && piece.alpha == 0 && l == 2) label = "II-3";
    if (piece.left == 2 && piece.alpha == 1 && l == 1) label = "II-4";
    if (piece.left == 1 && piece.alpha == 1 && l == 0) label = "II-5";
    if (piece.left == 2 && piece.alpha == 2 && l == 0) label = "II-6";
    if (label.empty()) {
      throw ContractViolation("composition summand outside the expected six: (" +
                              std::to_string(piece.left) + "," + std::to_string(piece.alpha) + "," +
                              std::to_string(piece.right) + ")");
    }
    Component at0 = pdo::evaluate_at_origin(piece.value);
    totals_two.push_back(label);
    groups.push_back({label, at0.terms});
    if (label == "II-1") {
      split(at0, left_tag,
            {{"A", "II-1-A"}, {"B", "II-1-B"}, {"C", "II-1-C"}, {"D", "II-1-D"}, {"E", "II-1-E"}},
            groups, must_vanish);
    } else if (label == "II-3") {
      split(at0, right_tag,
            {{"ric", "II-3-A"}, {"Tab.c", "II-3-B"}, {"Tab.hat", "II-3-C"}, {"E.curv", "II-3-D"},
             {"E.scal", "II-3-E"}, {"E.dV", "II-3-F"}, {"E.V2", "II-3-G"}},
            groups, must_vanish);
    } else if (label == "II-4") {
      split(at0, right_tag, {{"ric", "II-4-A"}, {"Tab.c", "II-4-B"}, {"Tab.hat", "II-4-C"}}, groups,
            must_vanish);
    }
  }

  std::vector<std::function<ScalarInvariantExpr()>> jobs;
  for (const Group& g : groups) {
    jobs.emplace_back([&g, &options] { return wres_density(g.terms, options.bianchi); });
  }
  jobs.emplace_back([&must_vanish, &options] { return wres_density(must_vanish, options.bianchi); });
  jobs.emplace_back([&options] { return compute_metric_functional(options); });
  auto results = run_jobs(jobs, resolve_workers(options.workers));

  if (!results[groups.size()].is_zero()) {
    throw ContractViolation("pieces outside the ledger contribute " + results[groups.size()].to_string());
  }
  TermLedger ledger;
  for (std::size_t k = 0; k < groups.size(); ++k) ledger.set(groups[k].label, results[k]);
  ledger.set("metric", results.back());

  for (std::string label : {"II-1", "II-2", "II-3", "II-4", "II-5", "II-6"}) {
    if (!ledger.contains(label)) ledger.set(label, {});
  }
  auto sum_children = [&](const std::string& label) {
    ScalarInvariantExpr s;
    for (const std::string& c : TermLedger::children(label)) {
      if (ledger.contains(c)) s += ledger.at(c);
    }
    return s;
  };
  for (std::string label : {"II-1", "II-3", "II-4"}) {
    if (!(sum_children(label) == ledger.at(label))) {
      throw ContractViolation(label + " differs from the sum of its sub-terms");
    }
  }
  ledger.set("S1", sum_children("S1"));
  ledger.set("S2", sum_children("S2"));
  ledger.set("einstein", ledger.at("S1") + ledger.at("S2"));
  return ledger;
}

std::map<std::string, Affine> part_one_exponents(const Options& options) {
  auto data = operators::build_laplace_data({options.with_V});
  auto q = operators::parametrix_symbols(data, 1);
  std::map<std::string, Affine> out;
  for (const SymbolTerm& t : q.find(0)->terms) {
    auto [it, inserted] = out.emplace(t.tag, t.norm);
    if (!inserted && it->second != t.norm) {
      throw ContractViolation("piece " + t.tag + " mixes norm exponents");
    }
  }
  return out;
}

}  // namespace wres::residue
