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

// Evidence that an assignment is not Pareto optimal. Every certificate
// carries the improved assignment it proves, so callers can re-check the
// dominance claim independently of how it was found.

#ifndef PARETO_CERTIFICATE_HPP_
#define PARETO_CERTIFICATE_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pareto/model.hpp"

namespace pareto {

// Objects o_1..o_L of an improvement-graph cycle; the edges are
// o_1 -> o_2 -> ... -> o_L -> o_1 and edge `strict_index` is strict.
struct Cycle {
  std::vector<ObjectIndex> steps;
  std::size_t strict_index = 0;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// `taker` hands `pair_better` and `pair_worse` to `giver` in exchange for
// `gained`, which the taker strictly prefers to both.
struct SwapWitness {
  AgentIndex taker = 0;
  AgentIndex giver = 0;
  ObjectIndex pair_better = 0;
  ObjectIndex pair_worse = 0;
  ObjectIndex gained = 0;

  friend bool operator==(const SwapWitness&, const SwapWitness&) = default;
};

struct DominatingAssignment {
  Assignment assignment;

  friend bool operator==(const DominatingAssignment&,
                         const DominatingAssignment&) = default;
};

struct CycleMove {
  ObjectIndex object = 0;
  AgentIndex from = 0;
  AgentIndex to = 0;

  friend bool operator==(const CycleMove&, const CycleMove&) = default;
};

struct CycleCertificate {
  Cycle cycle;
  std::vector<CycleMove> moves;
  Assignment assignment;

  friend bool operator==(const CycleCertificate&,
                         const CycleCertificate&) = default;
};

struct SwapCertificate {
  SwapWitness witness;
  // Utility profile, consistent with every agent's tiers, under which
  // `assignment` Pareto-dominates the tested one.
  UtilityTable witness_utilities;
  Assignment assignment;

  friend bool operator==(const SwapCertificate&,
                         const SwapCertificate&) = default;
};

struct FlowImprovement {
  AgentIndex focus = 0;
  std::int64_t flow_value = 0;
  Assignment assignment;

  friend bool operator==(const FlowImprovement&,
                         const FlowImprovement&) = default;
};

using Certificate = std::variant<DominatingAssignment, CycleCertificate,
                                 SwapCertificate, FlowImprovement>;

const Assignment& improved_assignment(const Certificate& cert);

struct PoResult {
  bool optimal = true;
  std::optional<Certificate> certificate;
};

}  // namespace pareto

#endif  // PARETO_CERTIFICATE_HPP_
