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

#include "pareto/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "pareto/error.hpp"

namespace pareto {
namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw ValidationError(std::string("duplicate ") + what + " identifier '" +
                            name + "'");
    }
  }
}

// rank[object] for one agent; throws unless `tiers` partitions 0..m-1.
std::vector<std::size_t> tier_ranks(const Tiers& tiers, std::size_t m,
                                    const std::string& agent) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rank(m, kUnset);
  for (std::size_t t = 0; t < tiers.size(); ++t) {
    if (tiers[t].empty()) {
      throw ValidationError("agent '" + agent + "' has an empty tier");
    }
    for (ObjectIndex o : tiers[t]) {
      if (o >= m) {
        throw ValidationError("agent '" + agent + "' ranks an unknown object");
      }
      if (rank[o] != kUnset) {
        throw ValidationError("tiers of agent '" + agent +
                              "' are not a partition: object listed twice");
      }
      rank[o] = t;
    }
  }
  if (std::find(rank.begin(), rank.end(), kUnset) != rank.end()) {
    throw ValidationError("tiers of agent '" + agent +
                          "' are not a partition: object missing");
  }
  return rank;
}

Tiers tiers_from_utilities(const std::vector<Rational>& row) {
  std::vector<ObjectIndex> order(row.size());
  std::iota(order.begin(), order.end(), ObjectIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ObjectIndex a, ObjectIndex b) { return row[a] > row[b]; });
  Tiers tiers;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || row[order[i]] != row[order[i - 1]]) tiers.emplace_back();
    tiers.back().push_back(order[i]);
  }
  for (auto& tier : tiers) std::sort(tier.begin(), tier.end());
  return tiers;
}

}  // namespace

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::size_t num_agents, std::vector<AgentIndex> owners)
    : num_agents_(num_agents), owners_(std::move(owners)) {
  for (AgentIndex a : owners_) {
    if (a >= num_agents_) throw ValidationError("unknown agent in assignment");
  }
}

Assignment Assignment::from_bundles(std::size_t num_objects,
                                    std::span<const Bundle> bundles) {
  constexpr AgentIndex kUnset = static_cast<AgentIndex>(-1);
  std::vector<AgentIndex> owners(num_objects, kUnset);
  for (AgentIndex i = 0; i < bundles.size(); ++i) {
    for (ObjectIndex o : bundles[i]) {
      if (o >= num_objects) {
        throw ValidationError("unknown object in assignment");
      }
      if (owners[o] != kUnset) {
        throw ValidationError("object duplicated: index " + std::to_string(o));
      }
      owners[o] = i;
    }
  }
  for (ObjectIndex o = 0; o < num_objects; ++o) {
    if (owners[o] == kUnset) {
      throw ValidationError("object missing: index " + std::to_string(o));
    }
  }
  return Assignment(bundles.size(), std::move(owners));
}

Bundle Assignment::bundle(AgentIndex agent) const {
  Bundle out;
  for (ObjectIndex o = 0; o < owners_.size(); ++o) {
    if (owners_[o] == agent) out.push_back(o);
  }
  return out;
}

std::vector<Bundle> Assignment::bundles() const {
  std::vector<Bundle> out(num_agents_);
  for (ObjectIndex o = 0; o < owners_.size(); ++o) out[owners_[o]].push_back(o);
  return out;
}

// ---------------------------------------------------------------------------
// Instance

Instance Instance::create(std::vector<std::string> agents,
                          std::vector<std::string> objects,
                          std::optional<std::vector<Tiers>> preferences,
                          std::optional<UtilityTable> utilities,
                          std::optional<Assignment> endowment) {
  check_unique(agents, "agent");
  check_unique(objects, "object");
  const std::size_t n = agents.size();
  const std::size_t m = objects.size();
  if (!preferences && !utilities) {
    throw ValidationError("instance needs preferences or utilities");
  }
  if (utilities) {
    if (utilities->size() != n) {
      throw ValidationError("utility table has wrong number of agents");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if ((*utilities)[i].size() != m) {
        throw ValidationError("utilities of agent '" + agents[i] +
                              "' do not cover every object");
      }
      for (const Rational& u : (*utilities)[i]) {
        if (u < 0) {
          throw ValidationError("negative utility for agent '" + agents[i] + "'");
        }
      }
    }
  }

  Instance inst;
  if (preferences) {
    if (preferences->size() != n) {
      throw ValidationError("preferences have wrong number of agents");
    }
    inst.tiers_ = std::move(*preferences);
    for (auto& tiers : inst.tiers_) {
      for (auto& tier : tiers) std::sort(tier.begin(), tier.end());
    }
  } else {
    for (const auto& row : *utilities) {
      inst.tiers_.push_back(tiers_from_utilities(row));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    inst.rank_.push_back(tier_ranks(inst.tiers_[i], m, agents[i]));
  }

  if (utilities && preferences) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = (*utilities)[i];
      const auto& rank = inst.rank_[i];
      for (ObjectIndex a = 0; a < m; ++a) {
        for (ObjectIndex b = a + 1; b < m; ++b) {
          const bool ok = (rank[a] < rank[b] && row[a] > row[b]) ||
                          (rank[a] > rank[b] && row[a] < row[b]) ||
                          (rank[a] == rank[b] && row[a] == row[b]);
          if (!ok) {
            throw ValidationError("utilities of agent '" + agents[i] +
                                  "' are inconsistent with the tiers (objects '" +
                                  objects[a] + "', '" + objects[b] + "')");
          }
        }
      }
    }
  }

  if (endowment) {
    if (endowment->num_agents() != n || endowment->num_objects() != m) {
      throw ValidationError("endowment does not match the instance");
    }
  }

  inst.agents_ = std::move(agents);
  inst.objects_ = std::move(objects);
  inst.utilities_ = std::move(utilities);
  inst.endowment_ = std::move(endowment);
  return inst;
}

const std::string& Instance::agent_name(AgentIndex agent) const {
  check_agent(agent);
  return agents_[agent];
}

const std::string& Instance::object_name(ObjectIndex object) const {
  check_object(object);
  return objects_[object];
}

std::optional<AgentIndex> Instance::find_agent(std::string_view name) const {
  const auto it = std::find(agents_.begin(), agents_.end(), name);
  if (it == agents_.end()) return std::nullopt;
  return static_cast<AgentIndex>(it - agents_.begin());
}

std::optional<ObjectIndex> Instance::find_object(std::string_view name) const {
  const auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<ObjectIndex>(it - objects_.begin());
}

const Tiers& Instance::tiers(AgentIndex agent) const {
  check_agent(agent);
  return tiers_[agent];
}

std::size_t Instance::rank(AgentIndex agent, ObjectIndex object) const {
  check_agent(agent);
  check_object(object);
  return rank_[agent][object];
}

const UtilityTable& Instance::utilities() const {
  if (!utilities_) throw ValidationError("instance has no utilities");
  return *utilities_;
}

const Rational& Instance::utility(AgentIndex agent, ObjectIndex object) const {
  check_agent(agent);
  check_object(object);
  return utilities()[agent][object];
}

Instance Instance::with_utilities(UtilityTable utilities) const {
  return create(agents_, objects_, tiers_, std::move(utilities), endowment_);
}

Instance Instance::with_endowment(std::optional<Assignment> endowment) const {
  return create(agents_, objects_, tiers_, utilities_, std::move(endowment));
}

void Instance::check_agent(AgentIndex agent) const {
  if (agent >= agents_.size()) throw ValidationError("unknown agent index");
}

void Instance::check_object(ObjectIndex object) const {
  if (object >= objects_.size()) throw ValidationError("unknown object index");
}

// ---------------------------------------------------------------------------
// Free functions

Comparison reverse(Comparison c) {
  switch (c) {
    case Comparison::kStrictlyBetter:
      return Comparison::kStrictlyWorse;
    case Comparison::kStrictlyWorse:
      return Comparison::kStrictlyBetter;
    default:
      return c;
  }
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::kStrictlyBetter:
      return "strictly-better";
    case Comparison::kEqual:
      return "equal";
    case Comparison::kStrictlyWorse:
      return "strictly-worse";
    case Comparison::kIncomparable:
      return "incomparable";
  }
  return "?";
}

void validate_assignment(const Instance& inst, std::span<const Bundle> bundles) {
  if (bundles.size() != inst.num_agents()) {
    throw ValidationError("assignment has wrong number of agents");
  }
  Assignment::from_bundles(inst.num_objects(), bundles);
}

void validate_assignment(const Instance& inst, const Assignment& p) {
  if (p.num_agents() != inst.num_agents() ||
      p.num_objects() != inst.num_objects()) {
    throw ValidationError("assignment does not match the instance");
  }
}

Rational bundle_utility(const Instance& inst, AgentIndex agent,
                        std::span<const ObjectIndex> bundle) {
  Rational total = 0;
  for (ObjectIndex o : bundle) total += inst.utility(agent, o);
  return total;
}

Rational social_welfare(const Instance& inst, const Assignment& p) {
  Rational total = 0;
  for (const Rational& v : utility_vector(inst, p)) total += v;
  return total;
}

UtilityVector utility_vector(const Instance& inst, const Assignment& p) {
  validate_assignment(inst, p);
  return utility_vector(inst.utilities(), p);
}

UtilityVector utility_vector(const UtilityTable& utilities,
                             const Assignment& p) {
  UtilityVector out(p.num_agents(), Rational(0));
  for (ObjectIndex o = 0; o < p.num_objects(); ++o) {
    out[p.owner(o)] += utilities.at(p.owner(o)).at(o);
  }
  return out;
}

bool pareto_dominates(const UtilityVector& a, const UtilityVector& b) {
  if (a.size() != b.size()) return false;
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

Comparison sd_compare(const Instance& inst, AgentIndex agent,
                      std::span<const ObjectIndex> a,
                      std::span<const ObjectIndex> b) {
  const std::size_t k = inst.tiers(agent).size();
  std::vector<long> diff(k, 0);  // count_a - count_b per tier
  for (ObjectIndex o : a) ++diff[inst.rank(agent, o)];
  for (ObjectIndex o : b) --diff[inst.rank(agent, o)];
  bool a_ge = true;
  bool b_ge = true;
  long prefix = 0;
  for (long d : diff) {
    prefix += d;
    if (prefix < 0) a_ge = false;
    if (prefix > 0) b_ge = false;
  }
  if (a_ge && b_ge) return Comparison::kEqual;
  if (a_ge) return Comparison::kStrictlyBetter;
  if (b_ge) return Comparison::kStrictlyWorse;
  return Comparison::kIncomparable;
}

namespace {

// Kuhn's augmenting paths: can every object of `from` be matched to a
// distinct object of `to` that the agent weakly prefers?
bool has_improving_injection(const Instance& inst, AgentIndex agent,
                             std::span<const ObjectIndex> from,
                             std::span<const ObjectIndex> to) {
  if (from.size() > to.size()) return false;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_of_to(to.size(), kFree);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t f) -> bool {
    for (std::size_t t = 0; t < to.size(); ++t) {
      if (seen[t] || !inst.weakly_prefers(agent, to[t], from[f])) continue;
      seen[t] = 1;
      if (match_of_to[t] == kFree || self(self, match_of_to[t])) {
        match_of_to[t] = f;
        return true;
      }
    }
    return false;
  };
  for (std::size_t f = 0; f < from.size(); ++f) {
    seen.assign(to.size(), 0);
    if (!augment(augment, f)) return false;
  }
  return true;
}

}  // namespace

Comparison rs_compare(const Instance& inst, AgentIndex agent,
                      std::span<const ObjectIndex> a,
                      std::span<const ObjectIndex> b) {
  inst.check_agent(agent);
  for (ObjectIndex o : a) inst.check_object(o);
  for (ObjectIndex o : b) inst.check_object(o);
  const bool a_ge = has_improving_injection(inst, agent, b, a);
  const bool b_ge = has_improving_injection(inst, agent, a, b);
  if (a_ge && b_ge) return Comparison::kEqual;
  if (a_ge) return Comparison::kStrictlyBetter;
  if (b_ge) return Comparison::kStrictlyWorse;
  return Comparison::kIncomparable;
}

UtilityTable make_lex_utilities(const Instance& inst) {
  UtilityTable table(inst.num_agents(),
                     std::vector<Rational>(inst.num_objects(), Rational(0)));
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    const Tiers& tiers = inst.tiers(i);
    Rational worse_sum = 0;
    for (auto t = tiers.rbegin(); t != tiers.rend(); ++t) {
      const Rational value = worse_sum + 1;
      for (ObjectIndex o : *t) table[i][o] = value;
      worse_sum += value * static_cast<long>(t->size());
    }
  }
  return table;
}

}  // namespace pareto
