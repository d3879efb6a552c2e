// Copyright 2026 The bloch-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "blochlab/entropy.hpp"
#include "blochlab/io.hpp"
#include "blochlab/monotone.hpp"
#include "blochlab/sweep.hpp"
#include "blochlab/verify.hpp"

namespace py = pybind11;
namespace bl = blochlab;
using namespace pybind11::literals;

namespace {

py::object to_python(const bl::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

bl::OptimizerConfig optimizer(int restarts, std::uint64_t seed) {
  bl::OptimizerConfig c;
  c.restarts = restarts;
  c.seed = seed;
  return c;
}

py::object tensor_norms(const bl::DensityMatrix& rho, std::optional<std::pair<int, int>> split) {
  auto bases = bl::canonical_bases(rho.dims());
  if (split) {
    const auto [site, cut] = *split;
    if (site < 0 || site >= static_cast<int>(rho.num_sites()))
      throw bl::Error(bl::ErrorKind::invalid_subset, "split site " + std::to_string(site) + " out of range");
    bases[static_cast<std::size_t>(site)] =
        std::make_shared<const bl::OperatorBasis>(bl::split_basis(rho.dims()[static_cast<std::size_t>(site)], cut));
  }
  return to_python(bl::tensor_summary_to_json(bl::bloch_coefficients(rho, bases)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Split Bloch bases, correlation monotones and linear-entropy inequalities";

  py::register_exception<bl::Error>(m, "BlochLabError", PyExc_ValueError);

  py::class_<bl::DensityMatrix>(m, "DensityMatrix")
      .def(py::init(&bl::from_matrix), "dims"_a, "matrix"_a)
      .def_property_readonly("dims", &bl::DensityMatrix::dims)
      .def_property_readonly("matrix", &bl::DensityMatrix::matrix)
      .def_property_readonly("purity", &bl::DensityMatrix::purity)
      .def("__repr__", [](const bl::DensityMatrix& r) {
        std::string s = "DensityMatrix(dims=[";
        for (std::size_t i = 0; i < r.dims().size(); ++i) s += (i ? "," : "") + std::to_string(r.dims()[i]);
        return s + "])";
      });

  m.def("maximally_mixed", &bl::maximally_mixed, "dims"_a);
  m.def("max_entangled", &bl::max_entangled, "d"_a);
  m.def("ghz", &bl::ghz, "dims"_a);
  m.def("pure", &bl::pure, "dims"_a, "amplitudes"_a);
  m.def("tensor", &bl::tensor, "a"_a, "b"_a);
  m.def("partial_trace", &bl::partial_trace, "rho"_a, "keep"_a);
  m.def("purify", &bl::purify, "rho"_a);
  m.def(
      "random_state",
      [](const bl::Dims& dims, const std::string& ensemble, std::uint64_t seed, std::uint64_t index) {
        return bl::random_state(dims, bl::EnsembleSpec::parse(ensemble, seed), index);
      },
      "dims"_a, "ensemble"_a = "hs", "seed"_a = 1, "index"_a = 0);

  m.def(
      "basis",
      [](int d, std::optional<int> cut) {
        return to_python(bl::basis_to_json(cut ? bl::split_basis(d, *cut) : bl::gellmann_basis(d)));
      },
      "d"_a, "cut"_a = py::none(), "Canonical basis, or the split basis when cut is given, as a dict");

  m.def("tensor_norms", &tensor_norms, "rho"_a, "split"_a = py::none(),
        "Squared correlation-tensor norms for every subset, c0, c0p and purity");
  m.def(
      "purity_from_tensor", [](const bl::DensityMatrix& rho) { return bl::purity_from_tensor(bl::bloch_coefficients(rho)); },
      "rho"_a);
  m.def(
      "split_purity",
      [](const bl::DensityMatrix& rho) {
        return bl::split_purity(bl::bloch_coefficients(rho, bl::matched_split_bases(rho.dims())));
      },
      "rho"_a);

  m.def(
      "correlation_monotone",
      [](const bl::DensityMatrix& rho, const std::string& partition, const std::string& policy, int restarts,
         std::uint64_t seed) {
        const auto part = bl::Bipartition::parse(partition, rho.num_sites());
        return to_python(bl::monotone_to_json(
            bl::correlation_monotone(rho, part, bl::NormalizationPolicy::parse(policy), optimizer(restarts, seed))));
      },
      "rho"_a, "partition"_a = "A|B", "policy"_a = "auto", "restarts"_a = 32, "seed"_a = 7);
  m.def(
      "monotone_pure_exact",
      [](const bl::DensityMatrix& rho, const std::string& partition, const std::string& policy) {
        return bl::monotone_pure_exact(rho, bl::Bipartition::parse(partition, rho.num_sites()),
                                       bl::NormalizationPolicy::parse(policy));
      },
      "rho"_a, "partition"_a = "A|B", "policy"_a = "auto");

  m.def("linear_entropy", &bl::linear_entropy, "rho"_a);
  m.def("tsallis", &bl::tsallis, "rho"_a, "q"_a);
  m.def("renyi", &bl::renyi, "rho"_a, "alpha"_a);

  m.def(
      "check",
      [](const bl::DensityMatrix& rho, const std::string& inequality, double q, int restarts) {
        bl::EvaluationOptions opts;
        opts.q = q;
        opts.optimizer.restarts = restarts;
        return to_python(bl::report_to_json(bl::evaluate_inequality(rho, inequality, opts)));
      },
      "rho"_a, "inequality"_a, "q"_a = 2.0, "restarts"_a = 32);

  m.def(
      "verify",
      [](const bl::Dims& dims, const std::string& ensemble, std::size_t samples, std::uint64_t seed,
         const std::string& inequalities, int threads, bool negate, int restarts) {
        bl::Campaign c;
        c.dims = dims;
        c.ensemble = bl::EnsembleSpec::parse(ensemble, seed);
        c.inequalities = bl::resolve_inequalities(inequalities, dims);
        c.samples = samples;
        c.seed = seed;
        c.threads = threads;
        c.negate = negate;
        c.options.optimizer.restarts = restarts;
        bl::CampaignReport r;
        {
          py::gil_scoped_release release;
          r = bl::run_campaign(c);
        }
        return to_python(bl::campaign_to_json(r, false));
      },
      "dims"_a, "ensemble"_a = "hs", "samples"_a = 1000, "seed"_a = 1, "inequalities"_a = "all", "threads"_a = 1,
      "negate"_a = false, "restarts"_a = 4);

  m.def(
      "sweep",
      [](const std::string& figure, const std::vector<int>& dims, int points, const std::string& which, int threads) {
        bl::Table t;
        if (figure == "fig1")
          t = bl::sweep_fig1(dims.empty() ? std::vector<int>{2, 3, 4} : dims, bl::parse_fig1_case(which), points);
        else if (figure == "figA")
          t = bl::sweep_figA(dims.empty() ? std::vector<int>{2, 2} : dims, points, threads);
        else if (figure == "figB")
          t = bl::sweep_figB(dims.empty() ? std::vector<int>{2, 2, 2} : dims, points, threads);
        else
          throw bl::Error(bl::ErrorKind::invalid_parameter, "figure must be fig1, figA or figB, got '" + figure + "'");
        return to_python(t.to_json());
      },
      "figure"_a, "dims"_a = std::vector<int>{}, "points"_a = 101, "case"_a = "worst", "threads"_a = 1);
}
