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

// Pareto optimality when only the agents' weak orders are known.
//
// An assignment is possibly Pareto optimal (optimal for some consistent
// additive utilities) iff its improvement graph has no strict cycle. It is
// necessarily Pareto optimal (optimal for all of them) iff additionally no
// agent can trade two of its objects for a single object it strictly
// prefers to both.

#ifndef PARETO_ORDINAL_HPP_
#define PARETO_ORDINAL_HPP_

#include <cstdint>
#include <optional>

#include "pareto/additive.hpp"
#include "pareto/certificate.hpp"
#include "pareto/model.hpp"

namespace pareto {

PoResult test_possible_po(const Instance& inst, const Assignment& p);

// First swap in agent order, using each agent's worst and second-worst
// owned objects (ties by object order) as the traded pair.
std::optional<SwapWitness> find_one_for_two_swap(const Instance& inst,
                                                 const Assignment& p);

// Throws ValidationError if `w` is not a one-for-two swap of `p`.
void validate_swap_witness(const Instance& inst, const Assignment& p,
                           const SwapWitness& w);

// Returns the post-swap assignment.
Assignment apply_swap(const Assignment& p, const SwapWitness& w);

// True iff `utilities` is tier-consistent and makes the swap a strict
// improvement for both taker and giver.
bool is_swap_witness_profile(const Instance& inst, const SwapWitness& w,
                             const UtilityTable& utilities);

struct SwapWitnessProfile {
  UtilityTable utilities;
  Assignment dominating;
};

// Builds tier-consistent utilities under which the swap Pareto-dominates p.
SwapWitnessProfile witness_utilities_for_swap(const Instance& inst,
                                              const Assignment& p,
                                              const SwapWitness& w);

PoResult test_necessary_po(const Instance& inst, const Assignment& p);

struct NecessaryOracleResult {
  bool necessarily_optimal = true;
  // First assignment, in lexicographic owner order, that some consistent
  // utility profile prefers for everyone.
  std::optional<Assignment> witness;
};

// Reference oracle over all n^m assignments using rs_compare only.
NecessaryOracleResult necessary_po_oracle(
    const Instance& inst, const Assignment& p,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace pareto

#endif  // PARETO_ORDINAL_HPP_
