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

// Batch driver: run configuration, golden ledger comparison and report
// rendering behind the wres executable.

#ifndef WRES_CLI_HPP_
#define WRES_CLI_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wres/number.hpp"
#include "wres/residue.hpp"

namespace wres::cli {

enum class Functional { Metric, Einstein, Both };
enum class Format { Text, Json, Latex };
enum class Status { Match, PaperTypo, Mismatch };

std::string to_string(Status s);

struct RunConfig {
  std::optional<int> dimension;  // empty means symbolic m
  Functional functional = Functional::Einstein;
  bool bianchi = true;
  Format format = Format::Text;
  std::optional<std::string> golden_path;
  std::vector<std::string> term_filter;
  int workers = 0;
};

std::optional<int> parse_dimension(const std::string& text);
Functional parse_functional(const std::string& text);
Format parse_format(const std::string& text);
bool parse_switch(const std::string& text);

// Atom name -> coefficient polynomial in m, in units of TrId*Vol.
using AtomMap = std::map<std::string, Polynomial>;

AtomMap atom_map(const tensor::ScalarInvariantExpr& e);
AtomMap evaluate(const AtomMap& a, const Rational& m);

struct Golden {
  std::map<std::string, AtomMap> values;
  std::map<std::string, AtomMap> printed;
  std::map<std::string, std::string> notes;
  std::map<std::string, std::string> exponents;
};

Golden parse_golden(const std::string& json_text);
Golden load_golden(const std::string& path);
const Golden& embedded_golden();

struct EntryReport {
  std::string label;
  AtomMap value;
  AtomMap golden;
  std::optional<AtomMap> printed;  // set when the printed value differs
  std::string note;
  Status status = Status::Mismatch;
};

struct SymbolCheck {
  std::string tag;
  std::string derived;
  std::string printed;
  Status status = Status::Mismatch;
};

struct Report {
  RunConfig config;
  std::vector<EntryReport> entries;
  std::vector<SymbolCheck> checks;

  int exit_status() const;
  std::map<Status, int> counts() const;
};

Report build_report(const residue::TermLedger& ledger, const Golden& golden, const RunConfig& config,
                    const std::map<std::string, Affine>& exponents = {});

std::string render_text(const Report& r);
std::string render_json(const Report& r);
std::string render_latex(const Report& r);
std::string render(const Report& r);

std::string format_value(const AtomMap& a);
std::string format_latex(const AtomMap& a);

// "c1 c2 chat1" -> "-TrId" symbolically, or the integer at concrete n.
std::string query_trace(std::string_view text, std::optional<int> dimension);
// "2,0,0,0@n=4" -> "Vol/4".
std::string query_sphere(std::string_view text);

// Exit codes: 0 pass, 1 mismatch, 2 usage or configuration error.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_query(std::string_view kind, std::string_view text, std::optional<int> dimension,
              std::ostream& out, std::ostream& err);

}  // namespace wres::cli

#endif  // WRES_CLI_HPP_
