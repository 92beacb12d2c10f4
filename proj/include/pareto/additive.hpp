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

// Pareto optimality under general additive utilities.
//
// The set of achievable utility vectors is built one object at a time: each
// vector reachable after objects o_1..o_j spawns n successors, one per agent
// that could receive o_{j+1}. Duplicate vectors are merged, which keeps the
// table pseudo-polynomial for a fixed number of agents. Each vector keeps one
// representative (partial) assignment, the first one produced in scan order.

#ifndef PARETO_ADDITIVE_HPP_
#define PARETO_ADDITIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pareto/certificate.hpp"
#include "pareto/model.hpp"

namespace pareto {

inline constexpr std::size_t kDefaultMaxTableEntries = 10'000'000;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct VectorEntry {
  UtilityVector vector;
  Assignment representative;
};

struct VectorTable {
  std::vector<VectorEntry> entries;
};

// Throws ResourceError once the table would exceed `max_entries`.
VectorTable enumerate_feasible_vectors(
    const Instance& inst, std::size_t max_entries = kDefaultMaxTableEntries);

// Reference oracle: scans all n^m assignments in lexicographic owner order
// and returns the first that Pareto-dominates `p`. Throws ResourceError if
// n^m exceeds `budget`.
std::optional<DominatingAssignment> brute_force_dominator(
    const Instance& inst, const Assignment& p,
    std::uint64_t budget = kDefaultEnumerationBudget);

PoResult test_po_additive(const Instance& inst, const Assignment& p,
                          std::size_t max_entries = kDefaultMaxTableEntries);

// An individually rational, Pareto optimal assignment for `endowment`: the
// representative of the lexicographically greatest vector that is
// component-wise at least the endowment's vector.
Assignment find_ir_po_assignment(
    const Instance& inst, const Assignment& endowment,
    std::size_t max_entries = kDefaultMaxTableEntries);

}  // namespace pareto

#endif  // PARETO_ADDITIVE_HPP_
