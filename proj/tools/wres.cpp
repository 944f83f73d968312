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

// wres verify [--dimension D] [--functional F] [--bianchi on|off] [--format F]
//             [--golden PATH] [--term L1,L2,...]
// wres query trace|sphere EXPR [--dimension N]

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wres/cli.hpp"
#include "wres/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact residue densities for the Witten deformation d + d* + chat(V)"};
  app.require_subcommand(1);

  std::string dimension = "symbolic";
  std::string functional = "einstein";
  std::string bianchi = "on";
  std::string format = "text";
  std::string golden;
  std::vector<std::string> terms;

  CLI::App* verify = app.add_subcommand("verify", "Evaluate the ledger and compare against the golden values");
  verify->add_option("--dimension", dimension, "symbolic or an even integer >= 4");
  verify->add_option("--functional", functional, "metric, einstein or both");
  verify->add_option("--bianchi", bianchi, "first Bianchi pass: on or off");
  verify->add_option("--format", format, "text, json or latex");
  verify->add_option("--golden", golden, "golden ledger JSON (default: built-in)");
  verify->add_option("--term", terms, "restrict the report to these labels")->delimiter(',');

  std::string kind;
  std::string expression;
  std::string query_dimension;
  CLI::App* query = app.add_subcommand("query", "Evaluate a single trace or sphere integral");
  query->add_option("kind", kind, "trace or sphere")->required();
  query->add_option("expression", expression, "\"c1 c2 chat1\" or \"2,0,0,0@n=4\"")->required();
  query->add_option("--dimension", query_dimension, "concrete n for trace queries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      wres::cli::RunConfig config;
      config.dimension = wres::cli::parse_dimension(dimension);
      config.functional = wres::cli::parse_functional(functional);
      config.bianchi = wres::cli::parse_switch(bianchi);
      config.format = wres::cli::parse_format(format);
      if (!golden.empty()) config.golden_path = golden;
      config.term_filter = terms;
      config.workers = wres::residue::resolve_workers(0);
      return wres::cli::cmd_verify(config, std::cout, std::cerr);
    }
    std::optional<int> n;
    if (!query_dimension.empty()) n = wres::cli::parse_dimension(query_dimension);
    return wres::cli::cmd_query(kind, expression, n, std::cout, std::cerr);
  } catch (const wres::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
