// Copyright 2026 The pareto-po Authors
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

// Documents cross the boundary as JSON text; the Python package wraps
// these with dict conversion.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pareto/additive.hpp"
#include "pareto/error.hpp"
#include "pareto/hardness.hpp"
#include "pareto/io.hpp"
#include "pareto/verdict.hpp"

namespace py = pybind11;

namespace pareto {
namespace {

std::pair<Instance, Assignment> load(const std::string& instance,
                                     const std::optional<std::string>& assignment) {
  Instance inst = parse_instance(instance);
  if (assignment) {
    Assignment p = parse_assignment(inst, *assignment);
    return {std::move(inst), std::move(p)};
  }
  if (!inst.endowment()) {
    throw ValidationError("no assignment given and the instance has no endowment");
  }
  Assignment p = *inst.endowment();
  return {std::move(inst), std::move(p)};
}

std::string check(const std::string& instance, const std::optional<std::string>& assignment,
                  const std::string& mode, std::size_t max_table) {
  const auto [inst, p] = load(instance, assignment);
  return verdict_to_json(inst, run_check(inst, p, parse_mode(mode), {max_table})).dump();
}

bool verify(const std::string& instance, const std::optional<std::string>& assignment,
            const std::string& document) {
  const auto [inst, p] = load(instance, assignment);
  return verify_certificate(inst, p, certificate_from_document(inst, parse_json(document)));
}

std::optional<std::pair<std::string, std::size_t>> improve_step(
    const std::string& instance, const std::optional<std::string>& assignment,
    const std::string& mode, bool to_optimal) {
  const auto [inst, p] = load(instance, assignment);
  const auto r = improve(inst, p, parse_mode(mode), to_optimal);
  if (!r) return std::nullopt;
  return std::make_pair(serialize_assignment(inst, r->assignment), r->rounds);
}

std::string solve(const std::string& instance, std::size_t max_table) {
  const Instance inst = parse_instance(instance);
  if (!inst.endowment()) throw ValidationError("solve needs an instance with an endowment");
  return serialize_assignment(inst, find_ir_po_assignment(inst, *inst.endowment(), max_table));
}

std::pair<std::string, std::string> generate(const std::vector<int>& targets,
                                             std::int64_t scale) {
  const auto [inst, endowment] = generate_instance(validate_2nmts(targets), scale);
  return {serialize_instance(inst), serialize_assignment(inst, endowment)};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> solve_targets(
    const std::vector<int>& targets, std::size_t max_k) {
  const auto perms = solve_2nmts(validate_2nmts(targets), max_k);
  if (!perms) return std::nullopt;
  return std::make_pair(perms->pi, perms->theta);
}

}  // namespace
}  // namespace pareto

PYBIND11_MODULE(_core, m) {
  using namespace pareto;
  m.doc() = "Exact Pareto optimality tests for indivisible goods";
  auto base = py::register_exception<Error>(m, "ParetoError");
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<ResourceError>(m, "ResourceError", base);

  m.attr("DEFAULT_MAX_TABLE") = kDefaultMaxTableEntries;
  m.attr("DEFAULT_SCALE") = kDefaultScale;
  m.attr("DEFAULT_MAX_SOLVE_K") = kDefaultMaxSolveK;

  m.def("check", &check, py::arg("instance"), py::arg("assignment"), py::arg("mode"),
        py::arg("max_table"));
  m.def("verify", &verify, py::arg("instance"), py::arg("assignment"), py::arg("document"));
  m.def("improve", &improve_step, py::arg("instance"), py::arg("assignment"), py::arg("mode"),
        py::arg("to_optimal"));
  m.def("solve", &solve, py::arg("instance"), py::arg("max_table"));
  m.def("generate", &generate, py::arg("targets"), py::arg("scale"));
  m.def("solve_targets", &solve_targets, py::arg("targets"), py::arg("max_k"));
}
