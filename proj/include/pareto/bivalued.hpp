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

// Pareto optimality under two-valued utilities.
//
// With every utility equal to alpha or beta (alpha > beta > 0, or per-agent
// pairs sharing one ratio), an assignment p is dominated exactly when some
// agent j holding a low object can gain one more top object while every
// other agent keeps at least as many top objects as in p. That question is
// a max-flow problem per candidate agent j.

#ifndef PARETO_BIVALUED_HPP_
#define PARETO_BIVALUED_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pareto/certificate.hpp"
#include "pareto/model.hpp"

namespace pareto {

struct BivaluedView {
  // Normalized pair: (common ratio, 1). Agents using a single value are
  // all-top.
  Rational alpha;
  Rational beta;
  std::size_t num_objects = 0;
  std::vector<Bundle> top;
  std::vector<Bundle> low;
  std::vector<std::vector<char>> is_top;  // [agent][object]

  std::size_t num_agents() const { return top.size(); }
  std::size_t top_count(const Assignment& p, AgentIndex agent) const;
  std::size_t low_count(const Assignment& p, AgentIndex agent) const;
  std::size_t total_top_count(const Assignment& p) const;
};

// Throws ValidationError for missing or non-positive utilities, an agent
// with more than two values, or two-valued agents with different ratios.
BivaluedView classify_bivalued(const Instance& inst);

// View straight from top sets (one per agent); used when only the
// dichotomy is known.
BivaluedView bivalued_from_top_sets(std::size_t num_objects,
                                    const std::vector<Bundle>& top_sets);

struct FlowArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t capacity = 0;
};

// Node layout: source 0, agents 1..n, objects n+1..n+m, sink n+m+1. Arcs
// are agent->object (top objects, capacity 1), object->sink (capacity 1),
// then source->agent (top count in p, plus one for the focus agent).
struct FlowNetwork {
  std::size_t num_agents = 0;
  std::size_t num_objects = 0;
  AgentIndex focus = 0;
  std::vector<FlowArc> arcs;

  std::size_t num_nodes() const { return num_agents + num_objects + 2; }
  std::size_t source() const { return 0; }
  std::size_t sink() const { return num_agents + num_objects + 1; }
  std::size_t agent_node(AgentIndex a) const { return 1 + a; }
  std::size_t object_node(ObjectIndex o) const { return 1 + num_agents + o; }
  std::int64_t source_capacity(AgentIndex a) const;
};

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs
};

FlowNetwork build_flow_network(const BivaluedView& view, const Assignment& p,
                               AgentIndex focus);

// Edmonds-Karp; arcs are explored in declaration order, so the result is
// deterministic.
FlowResult max_flow(const FlowNetwork& net);

std::optional<FlowImprovement> find_improvement_bivalued(
    const BivaluedView& view, const Assignment& p);

// Applies improvements until none is left (at most m rounds). When `trace`
// is given it receives every intermediate assignment, starting with p.
Assignment optimize_bivalued(const BivaluedView& view, const Assignment& p,
                             std::vector<Assignment>* trace = nullptr);

PoResult test_po_bivalued(const BivaluedView& view, const Assignment& p);

}  // namespace pareto

#endif  // PARETO_BIVALUED_HPP_
