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

#include "pareto/lexgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "pareto/error.hpp"

namespace pareto {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Iterative Tarjan. Returns a component id per vertex.
std::vector<std::size_t> strong_components(const ImprovementGraph& g,
                                           CycleSearchStats& stats) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> index(n, kNone);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> comp(n, kNone);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t counter = 0;
  std::size_t num_comps = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos == 0 && index[v] == kNone) {
        ++stats.vertex_visits;
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      const auto& out = g.edges(v);
      if (pos < out.size()) {
        ++stats.edge_inspections;
        const std::size_t w = out[pos++].target;
        if (index[w] == kNone) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = num_comps;
        } while (w != v);
        ++num_comps;
      }
      const std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return comp;
}

}  // namespace

std::size_t ImprovementGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& out : adjacency_) total += out.size();
  return total;
}

std::optional<EdgeLabel> ImprovementGraph::edge(ObjectIndex from,
                                                ObjectIndex to) const {
  for (const GraphEdge& e : adjacency_.at(from)) {
    if (e.target == to) return e.label;
  }
  return std::nullopt;
}

ImprovementGraph build_graph(const Instance& inst, const Assignment& p) {
  validate_assignment(inst, p);
  const std::size_t m = inst.num_objects();
  std::vector<std::vector<GraphEdge>> adjacency(m);
  for (ObjectIndex o = 0; o < m; ++o) {
    const AgentIndex owner = p.owner(o);
    const std::size_t own_rank = inst.rank(owner, o);
    for (ObjectIndex other = 0; other < m; ++other) {
      if (other == o) continue;
      const std::size_t r = inst.rank(owner, other);
      if (r < own_rank) {
        adjacency[o].push_back({other, EdgeLabel::kStrict});
      } else if (r == own_rank) {
        adjacency[o].push_back({other, EdgeLabel::kIndifferent});
      }
    }
  }
  return ImprovementGraph(std::move(adjacency), p.owners());
}

std::optional<Cycle> find_strict_cycle(const ImprovementGraph& g,
                                       CycleSearchStats* stats) {
  CycleSearchStats local;
  CycleSearchStats& s = stats != nullptr ? *stats : local;
  const std::vector<std::size_t> comp = strong_components(g, s);

  for (ObjectIndex from = 0; from < g.num_vertices(); ++from) {
    for (const GraphEdge& e : g.edges(from)) {
      ++s.edge_inspections;
      if (e.label != EdgeLabel::kStrict || comp[e.target] != comp[from]) {
        continue;
      }
      // BFS from the edge's head back to its tail, inside the component.
      const std::size_t c = comp[from];
      std::vector<std::size_t> parent(g.num_vertices(), kNone);
      std::deque<std::size_t> queue{e.target};
      parent[e.target] = e.target;
      while (!queue.empty() && parent[from] == kNone) {
        const std::size_t v = queue.front();
        queue.pop_front();
        ++s.vertex_visits;
        for (const GraphEdge& next : g.edges(v)) {
          ++s.edge_inspections;
          if (comp[next.target] != c || parent[next.target] != kNone) continue;
          parent[next.target] = v;
          queue.push_back(next.target);
        }
      }
      // Walk parents from the tail: [from, ..., head].
      std::vector<ObjectIndex> path;
      for (std::size_t v = from; v != e.target; v = parent[v]) path.push_back(v);
      path.push_back(e.target);
      Cycle cycle;
      cycle.steps.push_back(from);
      for (auto it = path.rbegin(); it + 1 != path.rend(); ++it) {
        cycle.steps.push_back(*it);
      }
      cycle.strict_index = 0;
      return cycle;
    }
  }
  return std::nullopt;
}

std::vector<CycleMove> cycle_moves(const ImprovementGraph& g, const Cycle& c) {
  std::vector<CycleMove> moves;
  const std::size_t len = c.steps.size();
  for (std::size_t l = 0; l < len; ++l) {
    const ObjectIndex giver_side = c.steps[l];
    const ObjectIndex moved = c.steps[(l + 1) % len];
    moves.push_back({moved, g.owner(moved), g.owner(giver_side)});
  }
  return moves;
}

Assignment apply_cycle(const Assignment& p, const ImprovementGraph& g,
                       const Cycle& c) {
  const std::size_t len = c.steps.size();
  if (len < 2) throw ValidationError("cycle must visit at least two objects");
  if (std::set<ObjectIndex>(c.steps.begin(), c.steps.end()).size() != len) {
    throw ValidationError("cycle repeats an object");
  }
  if (p.num_objects() != g.num_vertices()) {
    throw ValidationError("stale cycle: graph does not match assignment");
  }
  bool strict = false;
  for (std::size_t l = 0; l < len; ++l) {
    const ObjectIndex from = c.steps[l];
    const ObjectIndex to = c.steps[(l + 1) % len];
    if (from >= g.num_vertices() || to >= g.num_vertices()) {
      throw ValidationError("stale cycle: unknown object");
    }
    const auto label = g.edge(from, to);
    if (!label) throw ValidationError("stale cycle: edge not in graph");
    if (g.owner(from) != p.owner(from)) {
      throw ValidationError("stale cycle: graph built for another assignment");
    }
    strict = strict || *label == EdgeLabel::kStrict;
  }
  if (!strict) throw ValidationError("cycle has no strict edge");

  std::vector<AgentIndex> owners = p.owners();
  for (const CycleMove& move : cycle_moves(g, c)) owners[move.object] = move.to;
  return Assignment(p.num_agents(), std::move(owners));
}

PoResult test_po_lex(const Instance& inst, const Assignment& p) {
  const ImprovementGraph g = build_graph(inst, p);
  const auto cycle = find_strict_cycle(g);
  if (!cycle) return {true, std::nullopt};
  CycleCertificate cert{*cycle, cycle_moves(g, *cycle), apply_cycle(p, g, *cycle)};
  return {false, std::move(cert)};
}

}  // namespace pareto
