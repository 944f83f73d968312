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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wres/cli.hpp"
#include "wres/error.hpp"
#include "wres/residue.hpp"
#include "wres/sphere.hpp"

namespace py = pybind11;

namespace {

py::object verify(std::optional<int> dimension, const std::string& functional, bool bianchi,
                  std::optional<std::string> golden, std::vector<std::string> terms, int workers) {
  wres::cli::RunConfig config;
  if (dimension) config.dimension = wres::cli::parse_dimension(std::to_string(*dimension));
  config.functional = wres::cli::parse_functional(functional);
  config.bianchi = bianchi;
  config.format = wres::cli::Format::Json;
  config.golden_path = std::move(golden);
  config.term_filter = std::move(terms);
  config.workers = workers;
  std::ostringstream out, err;
  int rc = 0;
  {
    py::gil_scoped_release release;
    rc = wres::cli::cmd_verify(config, out, err);
  }
  if (rc == 2 || out.str().empty()) throw wres::ConfigError(err.str());
  return py::module_::import("json").attr("loads")(out.str());
}

py::dict ledger(bool bianchi, bool with_V) {
  wres::residue::Options options;
  options.bianchi = bianchi;
  options.with_V = with_V;
  wres::residue::TermLedger l;
  {
    py::gil_scoped_release release;
    l = wres::residue::compute_einstein_functional(options);
  }
  py::dict d;
  for (const std::string& label : l.labels()) {
    d[py::str(label)] = wres::cli::format_value(wres::cli::atom_map(l.at(label)));
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(pywres, m) {
  m.doc() = "Exact residue densities of the deformed de Rham operator.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const wres::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const wres::ConfigError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const wres::DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("verify", &verify, py::arg("dimension") = py::none(), py::arg("functional") = "einstein",
        py::arg("bianchi") = true, py::arg("golden") = py::none(), py::arg("terms") = std::vector<std::string>{},
        py::arg("workers") = 0,
        "Run the ledger against the golden values; returns the JSON report as a dict.");
  m.def("ledger", &ledger, py::arg("bianchi") = true, py::arg("with_V") = true,
        "Every ledger entry as text, in units of TrId*Vol.");
  m.def("query_trace", &wres::cli::query_trace, py::arg("word"), py::arg("dimension") = py::none());
  m.def("query_sphere", &wres::cli::query_sphere, py::arg("expression"));
  m.def("vol_sphere", [](int m) { return wres::sphere::vol_sphere(m).to_string(); }, py::arg("m"),
        "Volume of S^{2m-1}, e.g. vol_sphere(2) == '2*pi^2'.");
}
