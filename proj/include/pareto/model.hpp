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

// Core data model: instances (agents, objects, weak-order preferences,
// optional exact utilities, optional endowment), assignments, and the
// bundle-level preference extensions (stochastic dominance and the
// responsive set extension).

#ifndef PARETO_MODEL_HPP_
#define PARETO_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pareto/rational.hpp"

namespace pareto {

using AgentIndex = std::size_t;
using ObjectIndex = std::size_t;

// A set of objects, kept sorted ascending by object index.
using Bundle = std::vector<ObjectIndex>;

// Equivalence classes of one agent's weak order, best class first.
using Tiers = std::vector<std::vector<ObjectIndex>>;

// utilities[agent][object].
using UtilityTable = std::vector<std::vector<Rational>>;

// One total utility per agent, in agent order.
using UtilityVector = std::vector<Rational>;

// Partition of the object set among agents, stored as one owner per object.
class Assignment {
 public:
  Assignment() = default;

  // Throws ValidationError if an owner is out of range.
  Assignment(std::size_t num_agents, std::vector<AgentIndex> owners);

  // Builds from per-agent bundles. Throws ValidationError naming the first
  // missing, duplicated, or out-of-range object.
  static Assignment from_bundles(std::size_t num_objects,
                                 std::span<const Bundle> bundles);

  std::size_t num_agents() const { return num_agents_; }
  std::size_t num_objects() const { return owners_.size(); }
  AgentIndex owner(ObjectIndex object) const { return owners_.at(object); }
  const std::vector<AgentIndex>& owners() const { return owners_; }

  Bundle bundle(AgentIndex agent) const;
  std::vector<Bundle> bundles() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  // Lexicographic on the owner vector.
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.owners_ <=> b.owners_;
  }

 private:
  std::size_t num_agents_ = 0;
  std::vector<AgentIndex> owners_;
};

class Instance {
 public:
  Instance() = default;

  // Validates and builds an instance. At least one of `preferences` and
  // `utilities` must be present. Utilities alone induce tiers by sorting
  // (equal utility => same tier, ties kept in object order); when both are
  // given they must agree. Utilities must be non-negative.
  static Instance create(std::vector<std::string> agents,
                         std::vector<std::string> objects,
                         std::optional<std::vector<Tiers>> preferences,
                         std::optional<UtilityTable> utilities,
                         std::optional<Assignment> endowment = std::nullopt);

  std::size_t num_agents() const { return agents_.size(); }
  std::size_t num_objects() const { return objects_.size(); }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& agent_name(AgentIndex agent) const;
  const std::string& object_name(ObjectIndex object) const;
  std::optional<AgentIndex> find_agent(std::string_view name) const;
  std::optional<ObjectIndex> find_object(std::string_view name) const;

  const Tiers& tiers(AgentIndex agent) const;
  const std::vector<Tiers>& preferences() const { return tiers_; }
  // Position of the object's tier for this agent, 0 = best.
  std::size_t rank(AgentIndex agent, ObjectIndex object) const;
  bool strictly_prefers(AgentIndex agent, ObjectIndex a, ObjectIndex b) const {
    return rank(agent, a) < rank(agent, b);
  }
  bool weakly_prefers(AgentIndex agent, ObjectIndex a, ObjectIndex b) const {
    return rank(agent, a) <= rank(agent, b);
  }

  bool has_utilities() const { return utilities_.has_value(); }
  // Throws ValidationError if the instance carries no utilities.
  const UtilityTable& utilities() const;
  const Rational& utility(AgentIndex agent, ObjectIndex object) const;

  const std::optional<Assignment>& endowment() const { return endowment_; }

  // Copies with a replaced component; the result is re-validated.
  Instance with_utilities(UtilityTable utilities) const;
  Instance with_endowment(std::optional<Assignment> endowment) const;

  void check_agent(AgentIndex agent) const;
  void check_object(ObjectIndex object) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> objects_;
  std::vector<Tiers> tiers_;
  std::vector<std::vector<std::size_t>> rank_;
  std::optional<UtilityTable> utilities_;
  std::optional<Assignment> endowment_;
};

enum class Comparison { kStrictlyBetter, kEqual, kStrictlyWorse, kIncomparable };

Comparison reverse(Comparison c);
std::string_view to_string(Comparison c);

// Checks that `bundles` partitions the instance's object set among its
// agents. Throws ValidationError otherwise.
void validate_assignment(const Instance& inst, std::span<const Bundle> bundles);
// Checks that an already-built assignment matches the instance's shape.
void validate_assignment(const Instance& inst, const Assignment& p);

Rational bundle_utility(const Instance& inst, AgentIndex agent,
                        std::span<const ObjectIndex> bundle);
Rational social_welfare(const Instance& inst, const Assignment& p);
UtilityVector utility_vector(const Instance& inst, const Assignment& p);
// Same, against an explicit table instead of the instance's utilities.
UtilityVector utility_vector(const UtilityTable& utilities,
                             const Assignment& p);

// Component-wise >= with at least one strict >.
bool pareto_dominates(const UtilityVector& a, const UtilityVector& b);

// Compares bundle `a` against `b` for `agent` by prefix counts over the
// agent's tiers. kStrictlyBetter means `a` stochastically dominates `b`.
Comparison sd_compare(const Instance& inst, AgentIndex agent,
                      std::span<const ObjectIndex> a,
                      std::span<const ObjectIndex> b);

// Same relation, decided by searching for an injection from one bundle into
// the other that maps every object to a weakly better one (bipartite
// matching). Agrees with sd_compare on every input.
Comparison rs_compare(const Instance& inst, AgentIndex agent,
                      std::span<const ObjectIndex> a,
                      std::span<const ObjectIndex> b);

// Integer lexicographic utilities from the tiers: the worst tier gets 1,
// every better tier gets 1 + the sum over all strictly worse objects.
UtilityTable make_lex_utilities(const Instance& inst);

}  // namespace pareto

#endif  // PARETO_MODEL_HPP_
