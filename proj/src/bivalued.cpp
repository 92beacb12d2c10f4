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

#include "pareto/bivalued.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "pareto/error.hpp"

namespace pareto {

std::size_t BivaluedView::top_count(const Assignment& p,
                                    AgentIndex agent) const {
  std::size_t count = 0;
  for (ObjectIndex o = 0; o < p.num_objects(); ++o) {
    if (p.owner(o) == agent && is_top[agent][o]) ++count;
  }
  return count;
}

std::size_t BivaluedView::low_count(const Assignment& p,
                                    AgentIndex agent) const {
  std::size_t count = 0;
  for (ObjectIndex o = 0; o < p.num_objects(); ++o) {
    if (p.owner(o) == agent && !is_top[agent][o]) ++count;
  }
  return count;
}

std::size_t BivaluedView::total_top_count(const Assignment& p) const {
  std::size_t total = 0;
  for (ObjectIndex o = 0; o < p.num_objects(); ++o) {
    if (is_top[p.owner(o)][o]) ++total;
  }
  return total;
}

BivaluedView bivalued_from_top_sets(std::size_t num_objects,
                                    const std::vector<Bundle>& top_sets) {
  BivaluedView view;
  view.alpha = 2;
  view.beta = 1;
  view.num_objects = num_objects;
  for (const Bundle& tops : top_sets) {
    std::vector<char> flags(num_objects, 0);
    for (ObjectIndex o : tops) {
      if (o >= num_objects) throw ValidationError("unknown object in top set");
      flags[o] = 1;
    }
    Bundle top;
    Bundle low;
    for (ObjectIndex o = 0; o < num_objects; ++o) {
      (flags[o] ? top : low).push_back(o);
    }
    view.top.push_back(std::move(top));
    view.low.push_back(std::move(low));
    view.is_top.push_back(std::move(flags));
  }
  return view;
}

BivaluedView classify_bivalued(const Instance& inst) {
  const UtilityTable& u = inst.utilities();
  std::optional<Rational> ratio;
  std::vector<Bundle> top_sets;
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    std::set<Rational> values;
    for (const Rational& v : u[i]) {
      if (v <= 0) {
        throw ValidationError("bivalued mode needs strictly positive utilities "
                              "(agent '" + inst.agent_name(i) + "')");
      }
      values.insert(v);
    }
    if (values.size() > 2) {
      throw ValidationError("agent '" + inst.agent_name(i) +
                            "' uses more than two values");
    }
    Bundle top;
    if (!values.empty()) {
      const Rational hi = *values.rbegin();
      if (values.size() == 2) {
        const Rational r = hi / *values.begin();
        if (ratio && *ratio != r) {
          throw ValidationError("two-valued agents use unequal ratios (" +
                                format_rational(*ratio) + " vs " +
                                format_rational(r) + ")");
        }
        ratio = r;
      }
      for (ObjectIndex o = 0; o < inst.num_objects(); ++o) {
        if (u[i][o] == hi) top.push_back(o);
      }
    }
    top_sets.push_back(std::move(top));
  }
  BivaluedView view = bivalued_from_top_sets(inst.num_objects(), top_sets);
  if (ratio) view.alpha = *ratio;
  return view;
}

std::int64_t FlowNetwork::source_capacity(AgentIndex a) const {
  for (const FlowArc& arc : arcs) {
    if (arc.from == source() && arc.to == agent_node(a)) return arc.capacity;
  }
  return 0;
}

FlowNetwork build_flow_network(const BivaluedView& view, const Assignment& p,
                               AgentIndex focus) {
  if (focus >= view.num_agents()) throw ValidationError("invalid focus agent");
  if (p.num_agents() != view.num_agents() ||
      p.num_objects() != view.num_objects) {
    throw ValidationError("assignment does not match the bivalued view");
  }
  FlowNetwork net;
  net.num_agents = view.num_agents();
  net.num_objects = view.num_objects;
  net.focus = focus;
  for (AgentIndex a = 0; a < net.num_agents; ++a) {
    for (ObjectIndex o : view.top[a]) {
      net.arcs.push_back({net.agent_node(a), net.object_node(o), 1});
    }
  }
  for (ObjectIndex o = 0; o < net.num_objects; ++o) {
    net.arcs.push_back({net.object_node(o), net.sink(), 1});
  }
  for (AgentIndex a = 0; a < net.num_agents; ++a) {
    const auto cap = static_cast<std::int64_t>(view.top_count(p, a)) +
                     (a == focus ? 1 : 0);
    net.arcs.push_back({net.source(), net.agent_node(a), cap});
  }
  return net;
}

FlowResult max_flow(const FlowNetwork& net) {
  // Residual edges 2k (forward) and 2k+1 (backward) for arc k.
  struct Residual {
    std::size_t to;
    std::int64_t cap;
  };
  std::vector<Residual> edges;
  std::vector<std::vector<std::size_t>> adj(net.num_nodes());
  for (const FlowArc& arc : net.arcs) {
    adj[arc.from].push_back(edges.size());
    edges.push_back({arc.to, arc.capacity});
    adj[arc.to].push_back(edges.size());
    edges.push_back({arc.from, 0});
  }

  const std::size_t s = net.source();
  const std::size_t t = net.sink();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  FlowResult result;
  for (;;) {
    std::vector<std::size_t> via(net.num_nodes(), kNone);
    std::vector<char> reached(net.num_nodes(), 0);
    std::deque<std::size_t> queue{s};
    reached[s] = 1;
    while (!queue.empty() && !reached[t]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : adj[v]) {
        if (edges[e].cap <= 0 || reached[edges[e].to]) continue;
        reached[edges[e].to] = 1;
        via[edges[e].to] = e;
        queue.push_back(edges[e].to);
      }
    }
    if (!reached[t]) break;
    std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
    for (std::size_t v = t; v != s; v = edges[via[v] ^ 1].to) {
      bottleneck = std::min(bottleneck, edges[via[v]].cap);
    }
    for (std::size_t v = t; v != s; v = edges[via[v] ^ 1].to) {
      edges[via[v]].cap -= bottleneck;
      edges[via[v] ^ 1].cap += bottleneck;
    }
    result.value += bottleneck;
  }
  result.arc_flow.reserve(net.arcs.size());
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    result.arc_flow.push_back(edges[2 * k + 1].cap);
  }
  return result;
}

std::optional<FlowImprovement> find_improvement_bivalued(
    const BivaluedView& view, const Assignment& p) {
  const std::size_t n = view.num_agents();
  const std::size_t m = view.num_objects;
  const auto target = static_cast<std::int64_t>(view.total_top_count(p)) + 1;
  for (AgentIndex focus = 0; focus < n; ++focus) {
    if (view.low_count(p, focus) == 0) continue;
    const FlowNetwork net = build_flow_network(view, p, focus);
    const FlowResult flow = max_flow(net);
    if (flow.value != target) continue;

    constexpr AgentIndex kUnset = std::numeric_limits<AgentIndex>::max();
    std::vector<AgentIndex> owners(m, kUnset);
    for (std::size_t k = 0; k < net.arcs.size(); ++k) {
      const FlowArc& arc = net.arcs[k];
      if (flow.arc_flow[k] == 0 || arc.from == net.source() ||
          arc.to == net.sink()) {
        continue;
      }
      owners[arc.to - net.object_node(0)] = arc.from - net.agent_node(0);
    }
    // Leftover objects refill the agents, in order, up to their low counts
    // in p (one fewer for the focus agent).
    std::vector<std::size_t> quota(n);
    for (AgentIndex a = 0; a < n; ++a) {
      quota[a] = view.low_count(p, a) - (a == focus ? 1 : 0);
    }
    AgentIndex filling = 0;
    for (ObjectIndex o = 0; o < m; ++o) {
      if (owners[o] != kUnset) continue;
      while (filling < n && quota[filling] == 0) ++filling;
      if (filling == n) throw std::logic_error("filler objects do not fit quotas");
      owners[o] = filling;
      --quota[filling];
    }
    return FlowImprovement{focus, flow.value, Assignment(n, std::move(owners))};
  }
  return std::nullopt;
}

Assignment optimize_bivalued(const BivaluedView& view, const Assignment& p,
                             std::vector<Assignment>* trace) {
  Assignment current = p;
  if (trace != nullptr) trace->push_back(current);
  for (std::size_t round = 0;; ++round) {
    auto step = find_improvement_bivalued(view, current);
    if (!step) return current;
    if (round >= view.num_objects) {
      throw std::logic_error("bivalued improvement did not terminate in m rounds");
    }
    current = std::move(step->assignment);
    if (trace != nullptr) trace->push_back(current);
  }
}

PoResult test_po_bivalued(const BivaluedView& view, const Assignment& p) {
  auto step = find_improvement_bivalued(view, p);
  if (!step) return {true, std::nullopt};
  return {false, std::move(*step)};
}

}  // namespace pareto
