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

#include "pareto/ordinal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pareto/error.hpp"
#include "pareto/lexgraph.hpp"

namespace pareto {

PoResult test_possible_po(const Instance& inst, const Assignment& p) {
  return test_po_lex(inst, p);
}

std::optional<SwapWitness> find_one_for_two_swap(const Instance& inst,
                                                 const Assignment& p) {
  validate_assignment(inst, p);
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    Bundle owned = p.bundle(i);
    if (owned.size() < 2) continue;
    std::stable_sort(owned.begin(), owned.end(), [&](ObjectIndex a, ObjectIndex b) {
      return inst.rank(i, a) < inst.rank(i, b);
    });
    const ObjectIndex worst = owned[owned.size() - 1];
    const ObjectIndex second = owned[owned.size() - 2];
    // Any valid pair's better object is weakly above `second`, so a gained
    // object that beats `second` is the only thing to look for.
    for (ObjectIndex o = 0; o < inst.num_objects(); ++o) {
      if (p.owner(o) == i || !inst.strictly_prefers(i, o, second)) continue;
      return SwapWitness{i, p.owner(o), second, worst, o};
    }
  }
  return std::nullopt;
}

void validate_swap_witness(const Instance& inst, const Assignment& p,
                           const SwapWitness& w) {
  validate_assignment(inst, p);
  inst.check_agent(w.taker);
  inst.check_agent(w.giver);
  inst.check_object(w.pair_better);
  inst.check_object(w.pair_worse);
  inst.check_object(w.gained);
  if (w.taker == w.giver) throw ValidationError("swap needs two agents");
  if (w.pair_better == w.pair_worse) {
    throw ValidationError("swap pair must be two distinct objects");
  }
  if (p.owner(w.pair_better) != w.taker || p.owner(w.pair_worse) != w.taker) {
    throw ValidationError("taker does not own the traded pair");
  }
  if (p.owner(w.gained) != w.giver) {
    throw ValidationError("giver does not own the gained object");
  }
  if (!inst.strictly_prefers(w.taker, w.gained, w.pair_better) ||
      !inst.weakly_prefers(w.taker, w.pair_better, w.pair_worse)) {
    throw ValidationError("swap objects violate the taker's preferences");
  }
}

Assignment apply_swap(const Assignment& p, const SwapWitness& w) {
  std::vector<AgentIndex> owners = p.owners();
  owners[w.gained] = w.taker;
  owners[w.pair_better] = w.giver;
  owners[w.pair_worse] = w.giver;
  return Assignment(p.num_agents(), std::move(owners));
}

bool is_swap_witness_profile(const Instance& inst, const SwapWitness& w,
                             const UtilityTable& utilities) {
  try {
    (void)inst.with_utilities(utilities);
  } catch (const ValidationError&) {
    return false;
  }
  for (const auto& row : utilities) {
    for (const Rational& v : row) {
      if (v <= 0) return false;
    }
  }
  const auto& t = utilities[w.taker];
  const auto& g = utilities[w.giver];
  return t[w.gained] > 2 * t[w.pair_better] &&
         g[w.gained] < g[w.pair_better] + g[w.pair_worse];
}

SwapWitnessProfile witness_utilities_for_swap(const Instance& inst,
                                              const Assignment& p,
                                              const SwapWitness& w) {
  validate_swap_witness(inst, p, w);
  UtilityTable u = make_lex_utilities(inst);

  // Taker: scale the tiers at and above the gained object until it is worth
  // more than twice the better traded object.
  auto& taker = u[w.taker];
  const std::size_t gained_rank = inst.rank(w.taker, w.gained);
  while (taker[w.gained] <= 2 * taker[w.pair_better]) {
    for (ObjectIndex o = 0; o < inst.num_objects(); ++o) {
      if (inst.rank(w.taker, o) <= gained_rank) taker[o] *= 2;
    }
  }

  // Giver: lexicographic values may make the gained object outweigh the
  // pair; if so, flatten to 2K - rank (K tiers), where any two objects
  // outweigh any one.
  auto& giver = u[w.giver];
  if (giver[w.gained] >= giver[w.pair_better] + giver[w.pair_worse]) {
    const auto k = static_cast<long>(inst.tiers(w.giver).size());
    for (ObjectIndex o = 0; o < inst.num_objects(); ++o) {
      giver[o] = Rational(2 * k - static_cast<long>(inst.rank(w.giver, o)));
    }
  }

  if (!is_swap_witness_profile(inst, w, u)) {
    throw std::logic_error("constructed swap witness utilities are invalid");
  }
  Assignment dominating = apply_swap(p, w);
  if (!pareto_dominates(utility_vector(u, dominating), utility_vector(u, p))) {
    throw std::logic_error("swap does not dominate under witness utilities");
  }
  return {std::move(u), std::move(dominating)};
}

PoResult test_necessary_po(const Instance& inst, const Assignment& p) {
  PoResult possible = test_possible_po(inst, p);
  if (!possible.optimal) return possible;
  const auto swap = find_one_for_two_swap(inst, p);
  if (!swap) return {true, std::nullopt};
  SwapWitnessProfile profile = witness_utilities_for_swap(inst, p, *swap);
  return {false, SwapCertificate{*swap, std::move(profile.utilities),
                                 std::move(profile.dominating)}};
}

NecessaryOracleResult necessary_po_oracle(const Instance& inst,
                                          const Assignment& p,
                                          std::uint64_t budget) {
  validate_assignment(inst, p);
  const std::size_t n = inst.num_agents();
  const std::size_t m = inst.num_objects();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < m; ++j) {
    total *= n;
    if (total > budget) {
      throw ResourceError("necessary-PO oracle exceeds budget of " +
                          std::to_string(budget) + " assignments");
    }
  }
  const std::vector<Bundle> before = p.bundles();
  std::vector<AgentIndex> owners(m, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    if (owners != p.owners()) {
      const Assignment q(n, owners);
      const std::vector<Bundle> after = q.bundles();
      bool nobody_worse = true;
      bool someone_better = false;
      for (AgentIndex i = 0; i < n && nobody_worse; ++i) {
        const Comparison c = rs_compare(inst, i, before[i], after[i]);
        if (c == Comparison::kStrictlyBetter) nobody_worse = false;
        if (c == Comparison::kStrictlyWorse || c == Comparison::kIncomparable) {
          someone_better = true;
        }
      }
      if (nobody_worse && someone_better) return {false, q};
    }
    for (std::size_t j = m; j-- > 0;) {
      if (++owners[j] < n) break;
      owners[j] = 0;
    }
  }
  return {true, std::nullopt};
}

}  // namespace pareto
