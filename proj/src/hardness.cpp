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

#include "pareto/hardness.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pareto/error.hpp"

namespace pareto {

TargetSums validate_2nmts(std::vector<int> a) {
  const auto k = static_cast<long>(a.size());
  if (k == 0) throw ValidationError("target sums are empty");
  long sum = 0;
  for (int v : a) {
    if (v < 1 || v > 2 * k - 1) {
      throw ValidationError("target " + std::to_string(v) +
                            " outside [1, " + std::to_string(2 * k - 1) + "]");
    }
    sum += v;
  }
  if (sum != k * (k + 1)) {
    throw ValidationError("targets sum to " + std::to_string(sum) +
                          ", expected k(k+1) = " + std::to_string(k * (k + 1)));
  }
  if (!std::is_sorted(a.begin(), a.end())) {
    throw ValidationError("targets are not sorted non-decreasingly");
  }
  return TargetSums{std::move(a)};
}

std::optional<Permutations> solve_2nmts(const TargetSums& t, std::size_t max_k) {
  const std::size_t k = t.k();
  if (k > max_k) {
    throw ResourceError("2NMTS solver bound exceeded: k = " + std::to_string(k) +
                        " > " + std::to_string(max_k));
  }
  std::vector<int> pi(k);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    std::vector<int> theta(k);
    std::vector<char> used(k + 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const int v = t.a[i] - pi[i];
      ok = v >= 1 && v <= static_cast<int>(k) && !used[v];
      if (ok) {
        used[v] = 1;
        theta[i] = v;
      }
    }
    if (ok) return Permutations{pi, std::move(theta)};
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

std::pair<Instance, Assignment> generate_instance(const TargetSums& t,
                                                  std::int64_t scale) {
  if (scale < 3) {
    throw ValidationError("scale must be at least 3 so that 1/scale < 1/2");
  }
  (void)validate_2nmts(t.a);
  const std::size_t k = t.k();
  const ReductionLayout at{k};
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t s = scale;

  std::vector<std::string> agents(at.num_agents());
  std::vector<std::string> objects(at.num_objects());
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string idx = std::to_string(i);
    agents[at.l(i)] = "l" + idx;
    agents[at.c(i)] = "c" + idx;
    agents[at.r(i)] = "r" + idx;
    objects[at.f_left(i)] = "fL" + idx;
    objects[at.f_right(i)] = "fR" + idx;
    objects[at.g_left(i)] = "gL" + idx;
    objects[at.g_right(i)] = "gR" + idx;
    objects[at.h_left(i)] = "hCL" + idx;
    objects[at.h_right(i)] = "hCR" + idx;
  }
  agents[at.d()] = "d";
  objects[at.g_center()] = "gC";
  objects[at.o()] = "obj";

  // Scaled utilities: (x + y*eps) * scale = x*scale + y.
  UtilityTable u(at.num_agents(),
                 std::vector<Rational>(at.num_objects(), Rational(0)));
  std::vector<AgentIndex> owners(at.num_objects());
  for (std::size_t i = 1; i <= k; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    const std::int64_t ai = t.a[i - 1];

    u[at.c(i)][at.h_left(i)] = ai * s;
    u[at.l(i)][at.h_left(i)] = s + 1;
    owners[at.h_left(i)] = at.c(i);

    u[at.c(i)][at.h_right(i)] = 3 * kk * s;
    u[at.r(i)][at.h_right(i)] = s - 1;
    owners[at.h_right(i)] = at.c(i);

    u[at.l(i)][at.f_left(i)] = s;
    u[at.r(i)][at.f_right(i)] = s;
    for (std::size_t j = 1; j <= k; ++j) {
      if (t.a[j - 1] >= ii + 1) {
        u[at.c(j)][at.f_left(i)] = ii * s;
        u[at.c(j)][at.f_right(i)] = (3 * kk + ii) * s;
      }
    }
    owners[at.f_left(i)] = at.l(i);
    owners[at.f_right(i)] = at.r(i);

    u[at.r(i)][at.g_right(i)] = 3 * s;
    if (i < k) {
      u[at.r(i + 1)][at.g_right(i)] = 3 * s + 1;
    } else {
      u[at.d()][at.g_right(i)] = 3 * s + 1;
    }
    owners[at.g_right(i)] = at.r(i);

    u[at.l(i)][at.g_left(i)] = 3 * s;
    if (i > 1) {
      u[at.l(i - 1)][at.g_left(i)] = 3 * s - 1;
    } else {
      u[at.r(1)][at.g_left(i)] = 3 * s + 1;
    }
    owners[at.g_left(i)] = at.l(i);
  }
  u[at.d()][at.g_center()] = 3 * s;
  u[at.l(k)][at.g_center()] = 3 * s - 1;
  owners[at.g_center()] = at.d();
  u[at.d()][at.o()] = s;
  owners[at.o()] = at.d();

  Assignment endowment(at.num_agents(), std::move(owners));
  Instance inst = Instance::create(std::move(agents), std::move(objects),
                                   std::nullopt, std::move(u), endowment);
  return {std::move(inst), std::move(endowment)};
}

namespace {

void check_permutation(const std::vector<int>& perm, std::size_t k,
                       const char* name) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(k);
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) {
    throw ValidationError(std::string(name) + " is not a permutation of 1..k");
  }
}

}  // namespace

Assignment construct_yes_improvement(const TargetSums& t,
                                     const Permutations& perms,
                                     const Instance& inst, const Assignment& p) {
  const std::size_t k = t.k();
  const ReductionLayout at{k};
  check_permutation(perms.pi, k, "pi");
  check_permutation(perms.theta, k, "theta");
  for (std::size_t i = 0; i < k; ++i) {
    if (perms.pi[i] + perms.theta[i] != t.a[i]) {
      throw ValidationError("permutations do not meet target sum " +
                            std::to_string(i + 1));
    }
  }
  if (inst.num_agents() != at.num_agents() ||
      inst.num_objects() != at.num_objects()) {
    throw ValidationError("instance was not generated from these targets");
  }
  validate_assignment(inst, p);

  std::vector<AgentIndex> owners(at.num_objects());
  for (std::size_t i = 1; i <= k; ++i) {
    owners[at.h_left(i)] = at.l(i);
    owners[i < k ? at.g_left(i + 1) : at.g_center()] = at.l(i);
    owners[at.h_right(i)] = at.r(i);
    owners[i > 1 ? at.g_right(i - 1) : at.g_left(1)] = at.r(i);
    owners[at.f_right(static_cast<std::size_t>(perms.pi[i - 1]))] = at.c(i);
    owners[at.f_left(static_cast<std::size_t>(perms.theta[i - 1]))] = at.c(i);
  }
  owners[at.o()] = at.d();
  owners[at.g_right(k)] = at.d();
  Assignment q(at.num_agents(), std::move(owners));

  if (!pareto_dominates(utility_vector(inst, q), utility_vector(inst, p))) {
    throw std::logic_error("constructed assignment does not dominate the endowment");
  }
  return q;
}

namespace {

class StructuredSearch {
 public:
  StructuredSearch(const Instance& inst, const Assignment& p,
                   std::uint64_t budget, StructuredSearchStats& stats)
      : n_(inst.num_agents()),
        m_(inst.num_objects()),
        budget_(budget),
        stats_(stats),
        owner_(m_, kUnset),
        count_(n_, 0),
        util_(n_, 0) {
    // Integer copy of the utilities over a common denominator.
    BigInt lcm = 1;
    for (const auto& row : inst.utilities()) {
      for (const Rational& v : row) {
        const BigInt den = denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
      }
    }
    const BigInt limit = std::numeric_limits<std::int64_t>::max() / (4 * (m_ + 1));
    value_.assign(n_, std::vector<std::int64_t>(m_, 0));
    for (AgentIndex i = 0; i < n_; ++i) {
      for (ObjectIndex o = 0; o < m_; ++o) {
        const Rational& v = inst.utilities()[i][o];
        const BigInt scaled = numerator(v) * (lcm / denominator(v));
        if (scaled > limit) {
          throw ValidationError("utilities too large for structured search");
        }
        value_[i][o] = static_cast<std::int64_t>(scaled);
      }
    }
    base_.assign(n_, 0);
    for (ObjectIndex o = 0; o < m_; ++o) base_[p.owner(o)] += value_[p.owner(o)][o];
  }

  std::optional<Assignment> run() {
    if (recurse()) return Assignment(n_, owner_);
    return std::nullopt;
  }

 private:
  static constexpr AgentIndex kUnset = std::numeric_limits<AgentIndex>::max();

  bool feasible(AgentIndex i, ObjectIndex o) const {
    return count_[i] < 2 && value_[i][o] > 0;
  }

  // Every agent can still reach its endowment utility with its open slots.
  bool bounds_hold() const {
    std::vector<std::int64_t> best;
    for (AgentIndex i = 0; i < n_; ++i) {
      const std::size_t open = 2 - count_[i];
      if (open == 0) {
        if (util_[i] < base_[i]) return false;
        continue;
      }
      best.clear();
      for (ObjectIndex o = 0; o < m_; ++o) {
        if (owner_[o] == kUnset && value_[i][o] > 0) best.push_back(value_[i][o]);
      }
      if (best.size() < open) return false;
      std::partial_sort(best.begin(), best.begin() + open, best.end(),
                        std::greater<>());
      std::int64_t reach = util_[i];
      for (std::size_t j = 0; j < open; ++j) reach += best[j];
      if (reach < base_[i]) return false;
    }
    return true;
  }

  bool recurse() {
    if (++stats_.nodes > budget_) {
      throw ResourceError("structured search exceeded budget of " +
                          std::to_string(budget_) + " nodes");
    }
    if (!bounds_hold()) return false;

    // Most constrained unassigned object first.
    ObjectIndex pick = kUnset;
    std::size_t pick_options = std::numeric_limits<std::size_t>::max();
    for (ObjectIndex o = 0; o < m_; ++o) {
      if (owner_[o] != kUnset) continue;
      std::size_t options = 0;
      for (AgentIndex i = 0; i < n_; ++i) options += feasible(i, o) ? 1 : 0;
      if (options == 0) return false;
      if (options < pick_options) {
        pick = o;
        pick_options = options;
      }
    }
    if (pick == kUnset) {
      // Complete; bounds_hold() already guarantees nobody is worse off.
      for (AgentIndex i = 0; i < n_; ++i) {
        if (util_[i] > base_[i]) return true;
      }
      return false;
    }

    for (AgentIndex i = 0; i < n_; ++i) {
      if (!feasible(i, pick)) continue;
      owner_[pick] = i;
      ++count_[i];
      util_[i] += value_[i][pick];
      if (recurse()) return true;
      util_[i] -= value_[i][pick];
      --count_[i];
      owner_[pick] = kUnset;
    }
    return false;
  }

  std::size_t n_;
  std::size_t m_;
  std::uint64_t budget_;
  StructuredSearchStats& stats_;
  std::vector<AgentIndex> owner_;
  std::vector<std::size_t> count_;
  std::vector<std::int64_t> util_;
  std::vector<std::int64_t> base_;
  std::vector<std::vector<std::int64_t>> value_;
};

}  // namespace

std::optional<Assignment> search_improvement_structured(
    const Instance& inst, const Assignment& p, std::uint64_t budget,
    StructuredSearchStats* stats) {
  validate_assignment(inst, p);
  if (inst.num_objects() != 2 * inst.num_agents()) {
    throw ValidationError("structured search needs exactly two objects per agent");
  }
  StructuredSearchStats local;
  StructuredSearch search(inst, p, budget, stats != nullptr ? *stats : local);
  return search.run();
}

}  // namespace pareto
