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

#include "wres/cli.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "wres/clifford.hpp"
#include "wres/error.hpp"
#include "wres/sphere.hpp"
#include "wres_golden_data.hpp"

namespace wres::cli {

using nlohmann::json;
using residue::TermLedger;

std::string to_string(Status s) {
  switch (s) {
    case Status::Match: return "MATCH";
    case Status::PaperTypo: return "PAPER_TYPO";
    case Status::Mismatch: return "MISMATCH";
  }
  return "?";
}

std::optional<int> parse_dimension(const std::string& text) {
  if (text == "symbolic") return std::nullopt;
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ConfigError("dimension must be 'symbolic' or an even integer >= 4, got '" + text + "'");
  }
  if (n < 4 || n % 2 != 0) throw ConfigError("dimension must be even and >= 4, got " + text);
  return n;
}

Functional parse_functional(const std::string& text) {
  if (text == "metric") return Functional::Metric;
  if (text == "einstein") return Functional::Einstein;
  if (text == "both") return Functional::Both;
  throw ConfigError("functional must be metric, einstein or both, got '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  throw ConfigError("format must be text, json or latex, got '" + text + "'");
}

bool parse_switch(const std::string& text) {
  if (text == "on") return true;
  if (text == "off") return false;
  throw ConfigError("expected on or off, got '" + text + "'");
}

AtomMap atom_map(const tensor::ScalarInvariantExpr& e) {
  if (!e.residuals().empty()) {
    throw ContractViolation("expression has unreduced terms: " + e.residuals().front().to_string());
  }
  AtomMap out;
  for (const auto& [mono, c] : e.terms()) {
    if (mono.trid != 1 || mono.vol != 1) {
      throw ContractViolation("term " + mono.to_string() + " is not in units of TrId*Vol");
    }
    if (!c.is_polynomial() || !c.is_real()) {
      throw ContractViolation("coefficient " + c.to_string() + " is not a real polynomial in m");
    }
    out[mono.atoms] = c.numerator();
  }
  return out;
}

AtomMap evaluate(const AtomMap& a, const Rational& m) {
  AtomMap out;
  for (const auto& [atom, p] : a) {
    Gaussian v = p.evaluate(Gaussian(m));
    if (!v.is_zero()) out[atom] = Polynomial(v);
  }
  return out;
}

namespace {

AtomMap parse_atoms(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object of atoms");
  AtomMap out;
  for (const auto& [atom, list] : j.items()) {
    if (!list.is_array()) throw ConfigError(where + "." + atom + ": expected a coefficient list");
    std::vector<Gaussian> coefficients;
    for (const auto& c : list) {
      if (!c.is_string()) throw ConfigError(where + "." + atom + ": coefficients must be \"p/q\" strings");
      try {
        coefficients.emplace_back(parse_rational(c.get<std::string>()));
      } catch (const ParseError& e) {
        throw ConfigError(where + "." + atom + ": " + e.what());
      }
    }
    Polynomial p(std::move(coefficients));
    if (!p.is_zero()) out[atom] = std::move(p);
  }
  return out;
}

json atoms_json(const AtomMap& a) {
  json j = json::object();
  for (const auto& [atom, p] : a) {
    json list = json::array();
    for (const Gaussian& g : p.coefficients()) list.push_back(wres::to_string(g.re()));
    j[atom] = list;
  }
  return j;
}

const std::regex& affine_pattern() {
  static const std::regex re(R"(^(-?[0-9]*m)?([+-]?[0-9]+)?$)");
  return re;
}

// Part I label whose value exercises each tagged piece.
const std::map<std::string, std::string>& exponent_labels() {
  static const std::map<std::string, std::string> m = {
      {"ric", "I-1"},    {"Tab.c", "I-2"}, {"Tab.hat", "I-3"}, {"E.curv", "I-4"},
      {"E.scal", "I-5"}, {"E.dV", "I-6"},  {"E.V2", "I-7"}};
  return m;
}

}  // namespace

Golden parse_golden(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("golden file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("golden file must be a JSON object");
  if (!j.contains("units") || j["units"] != "TrId*Vol") {
    throw ConfigError("golden file must declare \"units\": \"TrId*Vol\"");
  }
  if (!j.contains("labels") || !j["labels"].is_object()) {
    throw ConfigError("golden file must have a \"labels\" object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "units" && key != "labels" && key != "printed" && key != "notes" && key != "exponents") {
      throw ConfigError("golden file has unknown key \"" + key + "\"");
    }
  }
  Golden g;
  auto check_label = [](const std::string& label) {
    if (!TermLedger::is_known(label)) throw ConfigError("golden file names unknown label " + label);
  };
  for (const auto& [label, atoms] : j["labels"].items()) {
    check_label(label);
    g.values[label] = parse_atoms(atoms, "labels." + label);
  }
  if (j.contains("printed")) {
    for (const auto& [label, atoms] : j["printed"].items()) {
      check_label(label);
      g.printed[label] = parse_atoms(atoms, "printed." + label);
    }
  }
  if (j.contains("notes")) {
    for (const auto& [label, note] : j["notes"].items()) {
      check_label(label);
      if (!note.is_string()) throw ConfigError("notes." + label + " must be a string");
      g.notes[label] = note.get<std::string>();
    }
  }
  if (j.contains("exponents")) {
    for (const auto& [tag, value] : j["exponents"].items()) {
      if (!exponent_labels().contains(tag)) throw ConfigError("exponents names unknown piece " + tag);
      if (!value.is_string() || !std::regex_match(value.get<std::string>(), affine_pattern())) {
        throw ConfigError("exponents." + tag + " must be an affine string such as \"-2m-2\"");
      }
      g.exponents[tag] = value.get<std::string>();
    }
  }
  return g;
}

Golden load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read golden file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_golden(buf.str());
}

const Golden& embedded_golden() {
  static const Golden g = parse_golden(kGoldenLedgerJson);
  return g;
}

int Report::exit_status() const {
  for (const auto& e : entries) {
    if (e.status == Status::Mismatch) return 1;
  }
  for (const auto& c : checks) {
    if (c.status == Status::Mismatch) return 1;
  }
  return 0;
}

std::map<Status, int> Report::counts() const {
  std::map<Status, int> n{{Status::Match, 0}, {Status::PaperTypo, 0}, {Status::Mismatch, 0}};
  for (const auto& e : entries) ++n[e.status];
  for (const auto& c : checks) ++n[c.status];
  return n;
}

Report build_report(const TermLedger& ledger, const Golden& golden, const RunConfig& config,
                    const std::map<std::string, Affine>& exponents) {
  Report r;
  r.config = config;
  std::map<std::string, AtomMap> values;
  std::map<std::string, AtomMap> expected;
  std::map<std::string, AtomMap> printed;
  for (const std::string& label : ledger.labels()) {
    auto g = golden.values.find(label);
    if (g == golden.values.end()) throw ConfigError("golden file has no entry for " + label);
    AtomMap v = atom_map(ledger.at(label));
    AtomMap e = g->second;
    auto p = golden.printed.find(label);
    AtomMap pr = p == golden.printed.end() ? e : p->second;
    if (config.dimension) {
      Rational m(*config.dimension / 2);
      v = evaluate(v, m);
      e = evaluate(e, m);
      pr = evaluate(pr, m);
    }
    values[label] = std::move(v);
    expected[label] = std::move(e);
    printed[label] = std::move(pr);
  }
  auto consistent = [&](const std::string& label) {
    return values[label] == expected[label] && printed[label] == expected[label];
  };
  std::map<std::string, Status> status;
  for (const std::string& label : ledger.labels()) {
    Status s = Status::Mismatch;
    if (values[label] == expected[label]) {
      if (printed[label] == expected[label]) {
        s = Status::Match;
      } else {
        std::string parent = TermLedger::parent(label);
        if (!parent.empty() && ledger.contains(parent) && consistent(parent)) s = Status::PaperTypo;
      }
    }
    status[label] = s;
  }
  auto selected = [&](const std::string& label) {
    if (config.term_filter.empty()) return true;
    return std::find(config.term_filter.begin(), config.term_filter.end(), label) !=
           config.term_filter.end();
  };
  for (const std::string& label : ledger.labels()) {
    if (!selected(label)) continue;
    EntryReport e;
    e.label = label;
    e.value = values[label];
    e.golden = expected[label];
    if (printed[label] != expected[label]) e.printed = printed[label];
    auto note = golden.notes.find(label);
    if (note != golden.notes.end()) e.note = note->second;
    e.status = status[label];
    r.entries.push_back(std::move(e));
  }
  if (config.term_filter.empty()) {
    for (const auto& [tag, derived] : exponents) {
      auto p = golden.exponents.find(tag);
      if (p == golden.exponents.end()) continue;
      SymbolCheck c{tag, derived.to_string(), p->second, Status::Match};
      if (c.derived != c.printed) {
        const std::string& label = exponent_labels().at(tag);
        c.status = ledger.contains(label) && status[label] == Status::Match ? Status::PaperTypo
                                                                          : Status::Mismatch;
      }
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

std::string format_value(const AtomMap& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [atom, p] : a) {
    std::string body;
    bool negative = false;
    if (p.degree() == 0) {
      Rational c = p.coefficient(0).re();
      negative = sgn(c) < 0;
      if (abs(c) != 1) body = wres::to_string(Rational(abs(c))) + "*";
    } else {
      body = "(" + p.to_string() + ")*";
    }
    body += atom;
    if (s.empty()) {
      s = negative ? "-" + body : body;
    } else {
      s += (negative ? " - " : " + ") + body;
    }
  }
  return s;
}

namespace {

std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k).re();
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string body = latex_rational(mag);
    if (k == 0) {
      s += body;
      continue;
    }
    if (mag != 1) s += body + " ";
    s += k == 1 ? "m" : "m^{" + std::to_string(k) + "}";
  }
  return s;
}

std::string latex_atom(const std::string& atom) {
  std::string out;
  std::string rest = atom;
  std::size_t pos;
  while ((pos = rest.find('*')) != std::string::npos) {
    out += latex_atom(rest.substr(0, pos)) + "\\,";
    rest = rest.substr(pos + 1);
  }
  if (rest.starts_with("Ric")) return out + "\\mathrm{Ric}" + rest.substr(3);
  return out + rest;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_') out += "\\";
    out += c;
  }
  return out;
}

std::string dimension_name(const RunConfig& c) {
  return c.dimension ? std::to_string(*c.dimension) : "symbolic";
}

std::string functional_name(Functional f) {
  switch (f) {
    case Functional::Metric: return "metric";
    case Functional::Einstein: return "einstein";
    case Functional::Both: return "both";
  }
  return "?";
}

// value * 2^{2m} * Vol(S^{2m-1}) as a rational multiple of pi^m.
std::string substituted(const Polynomial& p, int n) {
  const int m = n / 2;
  sphere::VolSphereValue vol = sphere::vol_sphere(m);
  Rational c = p.evaluate(Gaussian(Rational(m))).re();
  c *= Rational(mpz_class(1) << (2 * m));
  c *= vol.coefficient;
  return wres::to_string(c) + "*pi^" + std::to_string(m);
}

}  // namespace

std::string format_latex(const AtomMap& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [atom, p] : a) {
    std::string c = latex_polynomial(p);
    bool compound = p.degree() > 0 && (c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos);
    if (compound) c = "\\left(" + c + "\\right)";
    if (p.degree() == 0 && abs(p.coefficient(0).re()) == 1) c.resize(c.size() - 1);
    std::string sign = s.empty() ? "" : " + ";
    if (!c.empty() && c.front() == '-') {
      sign = s.empty() ? "-" : " - ";
      c.erase(0, 1);
    }
    s += sign + (c.empty() ? latex_atom(atom) : c + " " + latex_atom(atom));
  }
  return s;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "verify dimension=" << dimension_name(r.config)
      << " functional=" << functional_name(r.config.functional)
      << " bianchi=" << (r.config.bianchi ? "on" : "off") << " units=TrId*Vol\n";
  for (const EntryReport& e : r.entries) {
    out << e.label << std::string(e.label.size() < 10 ? 10 - e.label.size() : 1, ' ') << to_string(e.status)
        << std::string(12 - to_string(e.status).size(), ' ') << format_value(e.value) << "\n";
    if (e.status == Status::Mismatch) out << "          expected: " << format_value(e.golden) << "\n";
    if (e.printed) out << "          printed: " << format_value(*e.printed) << "\n";
    if (!e.note.empty()) out << "          note: " << e.note << "\n";
    if (r.config.dimension) {
      for (const auto& [atom, p] : e.value) {
        out << "          " << atom << ": " << substituted(p, *r.config.dimension) << "\n";
      }
    }
  }
  if (!r.checks.empty()) {
    out << "norm exponents of sigma_{-2m}(D^{-2m+2}):\n";
    for (const SymbolCheck& c : r.checks) {
      out << c.tag << std::string(c.tag.size() < 10 ? 10 - c.tag.size() : 1, ' ') << to_string(c.status)
          << std::string(12 - to_string(c.status).size(), ' ') << "derived " << c.derived << " printed "
          << c.printed << "\n";
    }
  }
  auto n = r.counts();
  out << "summary: " << n[Status::Match] << " MATCH, " << n[Status::PaperTypo] << " PAPER_TYPO, "
      << n[Status::Mismatch] << " MISMATCH\n";
  return out.str();
}

std::string render_json(const Report& r) {
  json j;
  j["config"] = {{"bianchi", r.config.bianchi ? "on" : "off"},
                 {"dimension", dimension_name(r.config)},
                 {"functional", functional_name(r.config.functional)}};
  j["units"] = "TrId*Vol";
  j["entries"] = json::object();
  j["order"] = json::array();
  for (const EntryReport& e : r.entries) {
    json x;
    x["status"] = to_string(e.status);
    x["value"] = atoms_json(e.value);
    if (e.status == Status::Mismatch) x["expected"] = atoms_json(e.golden);
    if (e.printed) x["printed"] = atoms_json(*e.printed);
    if (!e.note.empty()) x["note"] = e.note;
    if (r.config.dimension) {
      json num = json::object();
      for (const auto& [atom, p] : e.value) num[atom] = substituted(p, *r.config.dimension);
      x["substituted"] = num;
    }
    j["entries"][e.label] = x;
    j["order"].push_back(e.label);
  }
  j["symbol_checks"] = json::object();
  for (const SymbolCheck& c : r.checks) {
    j["symbol_checks"][c.tag] = {{"derived", c.derived}, {"printed", c.printed}, {"status", to_string(c.status)}};
  }
  auto n = r.counts();
  j["summary"] = {{"MATCH", n[Status::Match]}, {"MISMATCH", n[Status::Mismatch]}, {"PAPER_TYPO", n[Status::PaperTypo]}};
  j["exit_status"] = r.exit_status();
  return j.dump(2) + "\n";
}

std::string render_latex(const Report& r) {
  std::ostringstream out;
  out << "% verify dimension=" << dimension_name(r.config) << " functional=" << functional_name(r.config.functional)
      << ", values in units of tr[id] Vol(S^{n-1})\n";
  out << "\\begin{tabular}{lll}\n";
  for (const EntryReport& e : r.entries) {
    out << e.label << " & " << latex_escape(to_string(e.status)) << " & $" << format_latex(e.value) << "$ \\\\\n";
  }
  for (const SymbolCheck& c : r.checks) {
    out << latex_escape(c.tag) << " & " << latex_escape(to_string(c.status)) << " & $\\|\\xi\\|^{" << c.derived
        << "}$ (printed $" << c.printed << "$) \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string render(const Report& r) {
  switch (r.config.format) {
    case Format::Text: return render_text(r);
    case Format::Json: return render_json(r);
    case Format::Latex: return render_latex(r);
  }
  return render_text(r);
}

std::string query_trace(std::string_view text, std::optional<int> dimension) {
  clifford::CliffordWord w = clifford::parse_word(text);
  if (dimension) {
    for (const auto& g : w) {
      if (g.index.value() > *dimension) {
        throw ConfigError("generator " + g.to_string() + " exceeds dimension " + std::to_string(*dimension));
      }
    }
  }
  Rational total;
  for (tensor::TensorTerm t : clifford::trace(clifford::CliffTerm{tensor::TensorTerm(Coeff(1)), w})) {
    if (!tensor::contract_deltas(t, nullptr)) continue;
    total += t.coeff.evaluate(Rational(0)).re();
  }
  if (dimension) {
    total *= Rational(mpz_class(1) << *dimension);
    return wres::to_string(total);
  }
  if (sgn(total) == 0) return "0";
  if (total == 1) return "TrId";
  if (total == -1) return "-TrId";
  return wres::to_string(total) + "*TrId";
}

std::string query_sphere(std::string_view text) {
  std::size_t at = text.find('@');
  if (at == std::string_view::npos) throw ParseError("expected '@n=<dimension>'", text.size());
  if (text.substr(at + 1, 2) != "n=") throw ParseError("expected 'n=' after '@'", at + 1);
  std::string_view dim = text.substr(at + 3);
  std::size_t dim_pos = at + 3;
  if (dim.empty() || dim.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("dimension must be a positive integer", dim_pos);
  }
  int n = std::stoi(std::string(dim));
  if (n < 2 || n % 2 != 0) throw ParseError("dimension must be even and >= 2", dim_pos);
  std::vector<int> exponents;
  std::size_t pos = 0;
  while (pos <= at) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos || end > at) end = at;
    std::string_view item = text.substr(pos, end - pos);
    std::size_t first = item.find_first_not_of(' ');
    std::size_t last = item.find_last_not_of(' ');
    if (first == std::string_view::npos) throw ParseError("empty exponent", pos);
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("exponent must be a non-negative integer", pos + first);
    }
    exponents.push_back(std::stoi(std::string(item)));
    pos = end + 1;
  }
  if (static_cast<int>(exponents.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " exponents, got " + std::to_string(exponents.size()), at);
  }
  Rational v = sphere::integrate_exponents(exponents, n);
  if (sgn(v) == 0) return "0";
  std::string num = v.get_num().get_str();
  std::string den = v.get_den().get_str();
  std::string head = num == "1" ? "Vol" : num + "*Vol";
  return den == "1" ? head : head + "/" + den;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    for (const std::string& label : config.term_filter) {
      if (!TermLedger::is_known(label)) throw ConfigError("unknown term label " + label);
    }
    Golden golden = config.golden_path ? load_golden(*config.golden_path) : embedded_golden();
    residue::Options options;
    options.bianchi = config.bianchi;
    options.workers = config.workers;
    TermLedger ledger;
    std::map<std::string, Affine> exponents;
    if (config.functional == Functional::Metric) {
      ledger.set("metric", residue::compute_metric_functional(options));
    } else {
      TermLedger full = residue::compute_einstein_functional(options);
      for (const std::string& label : full.labels()) {
        if (label != "metric" || config.functional == Functional::Both) ledger.set(label, full.at(label));
      }
      exponents = residue::part_one_exponents(options);
    }
    Report report = build_report(ledger, golden, config, exponents);
    out << render(report);
    return report.exit_status();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const TruncationError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_query(std::string_view kind, std::string_view text, std::optional<int> dimension,
              std::ostream& out, std::ostream& err) {
  try {
    if (kind == "trace") {
      out << query_trace(text, dimension) << "\n";
    } else if (kind == "sphere") {
      out << query_sphere(text) << "\n";
    } else {
      throw ConfigError("query kind must be trace or sphere, got '" + std::string(kind) + "'");
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wres::cli
