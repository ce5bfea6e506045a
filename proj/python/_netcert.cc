// Copyright 2026 The netcert Authors
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

// Python bindings. JSON documents cross the boundary as strings; the pure-Python wrapper in
// netcert/__init__.py converts them.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netcert/data.h"
#include "netcert/qsim.h"
#include "netcert/sdp.h"
#include "netcert/witness.h"

namespace py = pybind11;
using namespace netcert;

namespace {

std::vector<Basis> bases(const std::string &s) {
    return parse_bases(s);
}

Basis one_basis(const std::string &s) {
    if (s.size() != 1) {
        throw std::invalid_argument("expected a single basis letter, got '" + s + "'");
    }
    return parse_basis(s[0]);
}

}  // namespace

PYBIND11_MODULE(_netcert, m) {
    m.doc() = "Network incompatibility certificates via inflation";

    py::register_exception<NetworkError>(m, "NetworkError", PyExc_ValueError);
    py::register_exception<WitnessError>(m, "WitnessError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    py::class_<Network>(m, "Network")
        .def_static("from_json", [](const std::string &s) { return Network::from_json(nlohmann::ordered_json::parse(s)); })
        .def_static("from_file", &Network::from_file)
        .def_property_readonly("num_parties", &Network::num_parties)
        .def_property_readonly("num_sources", &Network::num_sources)
        .def("to_json", [](const Network &n) { return n.to_json().dump(); });
    m.def("ghz6_network", &ghz6_network, py::arg("n_inputs") = 1, py::arg("n_outputs") = 2);
    m.def("trident_network", &trident_network, py::arg("n_inputs") = 1, py::arg("n_outputs") = 2);

    py::class_<Distribution>(m, "Distribution")
        .def(py::init([](std::vector<int> n_inputs, std::vector<int> n_outputs, std::vector<double> table) {
                 Distribution d(std::move(n_inputs), std::move(n_outputs), std::move(table));
                 d.validate();
                 return d;
             }),
             py::arg("n_inputs"), py::arg("n_outputs"), py::arg("table"))
        .def_static("from_json", [](const std::string &s) { return Distribution::from_json(nlohmann::ordered_json::parse(s)); })
        .def("to_json", [](const Distribution &d) { return d.to_json().dump(); })
        .def_property_readonly("n_inputs", &Distribution::n_inputs)
        .def_property_readonly("n_outputs", &Distribution::n_outputs)
        .def_property_readonly("table",
                               [](const Distribution &d) {
                                   const auto &t = d.table();
                                   py::array_t<double> a({static_cast<py::ssize_t>(d.num_input_tuples()),
                                                          static_cast<py::ssize_t>(d.num_output_tuples())});
                                   std::copy(t.begin(), t.end(), a.mutable_data());
                                   return a;
                               })
        .def("prob", [](const Distribution &d, std::vector<int> a, std::vector<int> x) { return d.prob(a, x); })
        .def("max_signaling", &Distribution::max_signaling);

    m.def("ghz_distribution", [](double v, const std::string &b) { return ghz_setup_distribution(v, bases(b)); },
          py::arg("v"), py::arg("bases"));
    m.def("ghz_two_input", &ghz_setup_two_input, py::arg("v"));
    m.def("trident_distribution",
          [](double v, const std::string &b, bool noisy) { return trident_distribution(v, bases(b), noisy); },
          py::arg("v"), py::arg("bases"), py::arg("noisy_singles") = true);
    m.def("trident_two_input",
          [](double v, const std::string &pair, bool noisy) {
              if (pair.size() != 2) {
                  throw std::invalid_argument("expected a basis pair such as 'XZ'");
              }
              return trident_two_input(v, one_basis(pair.substr(0, 1)), one_basis(pair.substr(1, 1)), noisy);
          },
          py::arg("v"), py::arg("pair"), py::arg("noisy_singles") = true);

    py::class_<InflationModel>(m, "InflationModel")
        .def(py::init<Network, int, std::string>(), py::arg("network"), py::arg("order") = 2, py::arg("level") = "1")
        .def_property_readonly("size", [](const InflationModel &im) { return im.moments().size; })
        .def_property_readonly("num_variables",
                               [](const InflationModel &im) { return static_cast<int>(im.moments().variables.size()); })
        .def_property_readonly("level", &InflationModel::level)
        .def_property_readonly("order", &InflationModel::order)
        .def("to_sdpa", [](const InflationModel &im, const Distribution &p) { return to_sdpa(im.assemble(p)); });

    py::class_<SolveReport>(m, "SolveReport")
        .def_property_readonly("status", [](const SolveReport &r) { return status_name(r.status); })
        .def_readonly("lam", &SolveReport::lambda)
        .def_readonly("lambda_lower", &SolveReport::lambda_lower)
        .def_readonly("certificate_value", &SolveReport::certificate_value)
        .def_readonly("iterations", &SolveReport::iterations)
        .def_readonly("seconds", &SolveReport::seconds);

    m.def(
        "certify",
        [](const InflationModel &im, const Distribution &p, double tol, int max_iterations, bool full) {
            SolverOptions o;
            o.tol = tol;
            o.max_iterations = max_iterations;
            o.decide = !full;
            py::gil_scoped_release release;
            return AdmmSolver().solve(im.assemble(p), o);
        },
        py::arg("model"), py::arg("distribution"), py::arg("tol") = 1e-7, py::arg("max_iterations") = 20000,
        py::arg("full") = false);

    m.def(
        "critical_visibility",
        [](const InflationModel &im, const std::function<Distribution(double)> &family, double tol_v, double lo,
           double hi, double tol) {
            SolverOptions o;
            o.tol = tol;
            o.decide = true;
            BisectionResult b = critical_visibility(im, family, tol_v, AdmmSolver(), o, lo, hi);
            py::dict d;
            d["estimate"] = b.estimate;
            d["feasible_v"] = b.feasible_v;
            d["infeasible_v"] = b.infeasible_v;
            d["outcome"] = b.outcome == BisectionResult::Outcome::Bracketed          ? "bracketed"
                           : b.outcome == BisectionResult::Outcome::NeverInfeasible ? "never_infeasible"
                                                                                     : "always_infeasible";
            py::list steps;
            for (const auto &s : b.steps) {
                steps.append(py::make_tuple(s.v, status_name(s.status), s.lambda));
            }
            d["steps"] = steps;
            return d;
        },
        py::arg("model"), py::arg("family"), py::arg("tol_v") = 1e-3, py::arg("lo") = 0.0, py::arg("hi") = 1.0,
        py::arg("tol") = 1e-7);

    py::class_<Witness>(m, "Witness")
        .def_readonly("name", &Witness::name)
        .def("evaluate", &Witness::evaluate)
        .def("normalized", &Witness::normalized)
        .def_property_readonly("max_degree", &Witness::max_degree)
        .def_property_readonly("num_terms", [](const Witness &w) { return w.terms.size(); })
        .def("to_json", [](const Witness &w) { return serialize(w).dump(); })
        .def_static("from_json", [](const std::string &s) { return deserialize(nlohmann::ordered_json::parse(s)); });
    m.def("extract", &extract, py::arg("report"), py::arg("model"));
    m.def("fixture", &builtin_fixture, py::arg("name"));
    m.def("save_witness", &save_witness);
    m.def("load_witness", &load_witness);

    py::class_<CountsTable>(m, "CountsTable")
        .def_static("from_json", [](const std::string &s) { return parse_counts(nlohmann::ordered_json::parse(s)); })
        .def("to_json", [](const CountsTable &t) { return counts_to_json(t).dump(); })
        .def_property_readonly("total", &CountsTable::total)
        .def_property_readonly("num_settings", [](const CountsTable &t) { return t.settings.size(); });
    m.def("load_counts", &load_counts);
    m.def("counts_distribution", &to_distribution, py::arg("counts"), py::arg("alphabets"));
    m.def("sample_counts", &sample_synthetic, py::arg("distribution"), py::arg("alphabets"), py::arg("events"),
          py::arg("seed") = 1);

    py::class_<BootstrapResult>(m, "BootstrapResult")
        .def_readonly("fraction", &BootstrapResult::fraction)
        .def_readonly("repetitions", &BootstrapResult::repetitions)
        .def_readonly("mean", &BootstrapResult::mean)
        .def_readonly("std", &BootstrapResult::std)
        .def_readonly("band_low", &BootstrapResult::band_low)
        .def_readonly("band_high", &BootstrapResult::band_high)
        .def_readonly("events_per_repetition", &BootstrapResult::events_per_repetition)
        .def_readonly("values", &BootstrapResult::values);
    m.def(
        "bootstrap",
        [](const CountsTable &t, const std::vector<std::string> &alphabets, const Witness &w, double fraction, int reps,
           std::uint64_t seed, int threads) {
            py::gil_scoped_release release;
            return bootstrap_witness(t, alphabets, w, fraction, reps, seed, threads);
        },
        py::arg("counts"), py::arg("alphabets"), py::arg("witness"), py::arg("fraction"), py::arg("reps") = 100,
        py::arg("seed") = 1, py::arg("threads") = 1);
}
