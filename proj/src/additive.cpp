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

#include "pareto/additive.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "pareto/error.hpp"

namespace pareto {
namespace {

struct PartialEntry {
  UtilityVector vector;
  std::vector<AgentIndex> owners;  // owners of objects 0..j-1
};

bool weakly_above(const UtilityVector& a, const UtilityVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

VectorTable enumerate_feasible_vectors(const Instance& inst,
                                       std::size_t max_entries) {
  const UtilityTable& u = inst.utilities();
  const std::size_t n = inst.num_agents();
  const std::size_t m = inst.num_objects();
  if (n == 0 && m > 0) throw ValidationError("objects but no agents");

  std::vector<PartialEntry> layer;
  layer.push_back({UtilityVector(n, Rational(0)), {}});
  for (ObjectIndex o = 0; o < m; ++o) {
    std::vector<PartialEntry> next;
    std::map<UtilityVector, std::size_t> seen;
    for (const PartialEntry& entry : layer) {
      for (AgentIndex i = 0; i < n; ++i) {
        UtilityVector v = entry.vector;
        v[i] += u[i][o];
        if (seen.contains(v)) continue;
        if (next.size() >= max_entries) {
          throw ResourceError("utility-vector table exceeds " +
                              std::to_string(max_entries) + " entries");
        }
        seen.emplace(v, next.size());
        std::vector<AgentIndex> owners = entry.owners;
        owners.push_back(i);
        next.push_back({std::move(v), std::move(owners)});
      }
    }
    layer = std::move(next);
  }

  VectorTable table;
  table.entries.reserve(layer.size());
  for (PartialEntry& entry : layer) {
    table.entries.push_back(
        {std::move(entry.vector), Assignment(n, std::move(entry.owners))});
  }
  return table;
}

std::optional<DominatingAssignment> brute_force_dominator(
    const Instance& inst, const Assignment& p, std::uint64_t budget) {
  validate_assignment(inst, p);
  const std::size_t n = inst.num_agents();
  const std::size_t m = inst.num_objects();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (total > budget / std::max<std::uint64_t>(n, 1)) {
      throw ResourceError("brute-force enumeration exceeds budget of " +
                          std::to_string(budget) + " assignments");
    }
    total *= n;
  }
  if (total > budget) {
    throw ResourceError("brute-force enumeration exceeds budget of " +
                        std::to_string(budget) + " assignments");
  }

  const UtilityTable& u = inst.utilities();
  const UtilityVector base = utility_vector(inst, p);
  std::vector<AgentIndex> owners(m, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    UtilityVector v(n, Rational(0));
    for (ObjectIndex o = 0; o < m; ++o) v[owners[o]] += u[owners[o]][o];
    if (pareto_dominates(v, base)) {
      return DominatingAssignment{Assignment(n, owners)};
    }
    // Odometer step; the last object varies fastest.
    for (std::size_t j = m; j-- > 0;) {
      if (++owners[j] < n) break;
      owners[j] = 0;
    }
  }
  return std::nullopt;
}

PoResult test_po_additive(const Instance& inst, const Assignment& p,
                          std::size_t max_entries) {
  const UtilityVector base = utility_vector(inst, p);
  const VectorTable table = enumerate_feasible_vectors(inst, max_entries);
  for (const VectorEntry& entry : table.entries) {
    if (pareto_dominates(entry.vector, base)) {
      return {false, DominatingAssignment{entry.representative}};
    }
  }
  return {true, std::nullopt};
}

Assignment find_ir_po_assignment(const Instance& inst,
                                 const Assignment& endowment,
                                 std::size_t max_entries) {
  const UtilityVector base = utility_vector(inst, endowment);
  const VectorTable table = enumerate_feasible_vectors(inst, max_entries);
  // A dominator of an IR vector is itself IR and lexicographically greater,
  // so the lexicographic maximum of the IR set is globally undominated.
  const VectorEntry* best = nullptr;
  for (const VectorEntry& entry : table.entries) {
    if (!weakly_above(entry.vector, base)) continue;
    if (best == nullptr || best->vector < entry.vector) best = &entry;
  }
  // The endowment's own vector is always in the table.
  return best->representative;
}

}  // namespace pareto
