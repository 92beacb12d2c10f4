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

// The improvement graph of an assignment and its strict cycles.
//
// Vertices are objects. For every object o owned by agent i there is an edge
// o -> o' to each other object o' that i weakly prefers to o; the edge is
// strict when the preference is strict. Trading objects backwards along a
// cycle that contains a strict edge is a Pareto improvement for every
// additive utility profile consistent with the tiers, and such a cycle
// exists exactly when the assignment is not Pareto optimal under
// lexicographic utilities.

#ifndef PARETO_LEXGRAPH_HPP_
#define PARETO_LEXGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pareto/certificate.hpp"
#include "pareto/model.hpp"

namespace pareto {

enum class EdgeLabel { kStrict, kIndifferent };

struct GraphEdge {
  ObjectIndex target = 0;
  EdgeLabel label = EdgeLabel::kStrict;
};

class ImprovementGraph {
 public:
  ImprovementGraph(std::vector<std::vector<GraphEdge>> adjacency,
                   std::vector<AgentIndex> owner)
      : adjacency_(std::move(adjacency)), owner_(std::move(owner)) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const;
  // Out-edges in ascending target order.
  const std::vector<GraphEdge>& edges(ObjectIndex from) const {
    return adjacency_.at(from);
  }
  std::optional<EdgeLabel> edge(ObjectIndex from, ObjectIndex to) const;
  AgentIndex owner(ObjectIndex object) const { return owner_.at(object); }

 private:
  std::vector<std::vector<GraphEdge>> adjacency_;
  std::vector<AgentIndex> owner_;
};

// Work counters for the cycle search (vertex visits plus edge inspections).
struct CycleSearchStats {
  std::size_t vertex_visits = 0;
  std::size_t edge_inspections = 0;
};

ImprovementGraph build_graph(const Instance& inst, const Assignment& p);

// Strongly connected components, then the first strict edge (in vertex,
// then target order) whose endpoints share a component, closed by a
// shortest path back inside that component.
std::optional<Cycle> find_strict_cycle(const ImprovementGraph& g,
                                       CycleSearchStats* stats = nullptr);

// Each object o_{l+1} moves to the owner of o_l. Throws ValidationError if
// the cycle is shorter than 2, repeats an object, or uses a missing edge.
Assignment apply_cycle(const Assignment& p, const ImprovementGraph& g,
                       const Cycle& c);

std::vector<CycleMove> cycle_moves(const ImprovementGraph& g, const Cycle& c);

PoResult test_po_lex(const Instance& inst, const Assignment& p);

}  // namespace pareto

#endif  // PARETO_LEXGRAPH_HPP_
