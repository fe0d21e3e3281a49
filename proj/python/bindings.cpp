// Copyright 2026-present the rankdb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankdb/catalog.hpp"
#include "rankdb/checks.hpp"
#include "rankdb/query.hpp"
#include "rankdb/similarity.hpp"

namespace py = pybind11;
using namespace rankdb;

namespace {

TruthDegree to_degree(const ResiduatedLattice& L, const py::handle& h) {
  if (py::isinstance<py::str>(h)) return L.parse(h.cast<std::string>());
  return L.degree(h.cast<double>());
}

py::object value_to_py(const Value& v) {
  if (v.kind() == ValueKind::text) return py::str(v.as_text());
  return py::float_(v.as_number());
}

py::list table_rows(const RankedDataTable& d) {
  py::list out;
  auto names = d.scheme().names();
  for (const auto& [t, r] : sorted_rows(d)) {
    py::dict row;
    row["rank"] = r.value();
    for (std::size_t i = 0; i < names.size(); ++i) row[py::str(names[i])] = value_to_py(t.values[i]);
    out.append(row);
  }
  return out;
}

std::map<std::string, TruthDegree> to_assumptions(const Catalog& c, const py::dict& assume) {
  std::map<std::string, TruthDegree> out;
  for (const auto& [k, v] : assume) out.emplace(k.cast<std::string>(), to_degree(c.lattice, v));
  return out;
}

py::dict bound_dict(const SensitivityBound& b) {
  py::dict out;
  out["value"] = b.value.value();
  out["guarantee"] = to_string(b.guarantee);
  py::list trace;
  for (const auto& s : b.trace) {
    py::dict step;
    step["node"] = s.node;
    step["rule"] = s.rule;
    py::list inputs;
    for (const auto& d : s.inputs) inputs.append(d.value());
    step["inputs"] = inputs;
    step["output"] = s.output.value();
    step["guarantee"] = to_string(s.guarantee);
    trace.append(step);
  }
  out["trace"] = trace;
  return out;
}

ComparisonConfig comparison(const std::string& mode, const std::string& hedge) {
  ComparisonConfig cfg;
  cfg.mode = parse_comparison_mode(mode);
  cfg.hedge = parse_hedge(hedge);
  return cfg;
}

const RankedDataTable& table_of(const Catalog& c, const std::string& name) {
  auto it = c.tables.find(name);
  if (it == c.tables.end()) throw Error("unknown table '" + name + "'");
  return it->second;
}

}  // namespace

PYBIND11_MODULE(_rankdb, m) {
  m.doc() = "Similarity-based queries over ranked data tables";

  py::register_exception<Error>(m, "Error");

  py::class_<ResiduatedLattice>(m, "Lattice")
      .def(py::init([](const std::string& kind, std::uint32_t n) {
             return ResiduatedLattice::make(parse_lattice_kind(kind), n);
           }),
           py::arg("kind"), py::arg("n") = 0)
      .def_property_readonly("name", &ResiduatedLattice::name)
      .def_property_readonly("exact", &ResiduatedLattice::exact)
      .def("tnorm", [](const ResiduatedLattice& L, py::object a, py::object b) {
        return L.tnorm(to_degree(L, a), to_degree(L, b)).value();
      })
      .def("residuum", [](const ResiduatedLattice& L, py::object a, py::object b) {
        return L.residuum(to_degree(L, a), to_degree(L, b)).value();
      })
      .def("biresiduum", [](const ResiduatedLattice& L, py::object a, py::object b) {
        return L.biresiduum(to_degree(L, a), to_degree(L, b)).value();
      })
      .def("meet", [](const ResiduatedLattice& L, py::object a, py::object b) {
        return L.meet(to_degree(L, a), to_degree(L, b)).value();
      })
      .def("join", [](const ResiduatedLattice& L, py::object a, py::object b) {
        return L.join(to_degree(L, a), to_degree(L, b)).value();
      })
      .def("hedge", [](const ResiduatedLattice& L, const std::string& h, py::object a) {
        return apply_hedge(L, parse_hedge(h), to_degree(L, a)).value();
      })
      .def("__repr__", [](const ResiduatedLattice& L) { return "Lattice(" + L.name() + ")"; });

  py::class_<Catalog>(m, "Catalog")
      .def_property_readonly("lattice", [](const Catalog& c) { return c.lattice; })
      .def("tables", [](const Catalog& c) {
        std::vector<std::string> out;
        for (const auto& [name, t] : c.tables) out.push_back(name);
        return out;
      })
      .def("scheme", [](const Catalog& c, const std::string& name) {
        return table_of(c, name).scheme().names();
      })
      .def("rows", [](const Catalog& c, const std::string& name) { return table_rows(table_of(c, name)); })
      .def("load_table", [](Catalog& c, const std::string& name, const std::string& path) {
        load_table(c, name, path);
      }, py::arg("name"), py::arg("path"))
      .def("query", [](const Catalog& c, const std::string& text) {
        return table_rows(evaluate(*parse_query(text, c.lattice), c.tables));
      }, py::arg("expr"))
      .def("export", [](const Catalog& c, const std::string& text, const std::string& path) {
        save_table(evaluate(*parse_query(text, c.lattice), c.tables), path);
      }, py::arg("expr"), py::arg("path"))
      .def("sim", [](const Catalog& c, const std::string& t1, const std::string& t2,
                     const std::string& mode, const std::string& hedge) {
        Comparison r = compare(table_of(c, t1), table_of(c, t2), comparison(mode, hedge));
        py::dict out;
        out["forward"] = r.forward.value();
        out["backward"] = r.backward.value();
        out["similarity"] = r.similarity.value();
        return out;
      }, py::arg("first"), py::arg("second"), py::arg("mode") = "rank",
         py::arg("hedge") = "identity")
      .def("bound", [](const Catalog& c, const std::string& text, const py::dict& assume) {
        SchemeCatalog schemes = schemes_of(c.tables);
        return bound_dict(propagate_bound(*parse_query(text, c.lattice),
                                          to_assumptions(c, assume), c.lattice, &schemes));
      }, py::arg("expr"), py::arg("assume") = py::dict())
      .def("verify", [](const Catalog& c, const std::string& text,
                        const std::map<std::string, std::string>& alt, const py::dict& assume) {
        TableCatalog other = c.tables;
        for (const auto& [name, path] : alt) {
          Catalog tmp = c;
          load_table(tmp, name, path);
          other.insert_or_assign(name, tmp.tables.at(name));
        }
        VerifyReport r = verify_bound(*parse_query(text, c.lattice), c.tables, other,
                                      to_assumptions(c, assume), c.lattice);
        py::dict out;
        out["bound"] = bound_dict(r.bound);
        out["actual"] = r.actual.value();
        out["holds"] = r.holds;
        out["slack"] = r.slack;
        return out;
      }, py::arg("expr"), py::arg("alt"), py::arg("assume") = py::dict());

  m.def("load_config", [](const std::string& path) { return load_config(path); }, py::arg("path"));
  m.def("parse_query", [](const std::string& text) { return print_query(*parse_query(text)); },
        py::arg("text"), "Parses a query and returns its canonical text.");
  m.def("run_checks", [](std::uint64_t seed, std::size_t iterations,
                         const std::vector<std::string>& only) {
    checks::CheckOptions opt;
    opt.seed = seed;
    opt.iterations = iterations;
    py::list out;
    for (const auto& suite : checks::suites()) {
      if (!only.empty() && std::find(only.begin(), only.end(), suite.name) == only.end()) continue;
      for (const auto& r : suite.run(opt)) {
        py::dict d;
        d["suite"] = r.suite;
        d["name"] = r.name;
        d["instances"] = r.instances;
        d["violations"] = r.violations;
        d["first_failure"] = r.first_failure;
        d["ok"] = r.ok();
        out.append(d);
      }
    }
    return out;
  }, py::arg("seed") = 1, py::arg("iterations") = 1000, py::arg("suites") = std::vector<std::string>{});
}
