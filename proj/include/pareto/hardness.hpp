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

// Instances built from 2-numerical matching with target sums (2NMTS): given
// a_1 <= ... <= a_k with sum k(k+1) and 1 <= a_i <= 2k-1, are there
// permutations pi, theta of 1..k with pi(i) + theta(i) = a_i?
//
// The generated instance has 3k+1 agents (l_i, c_i, r_i, d) and 6k+2
// objects, every agent endowed with two of them. Its endowment admits a
// Pareto improvement exactly when the target sums are a yes-instance.
// Utilities use epsilon = 1/scale and are multiplied by `scale`, so every
// value is an integer.

#ifndef PARETO_HARDNESS_HPP_
#define PARETO_HARDNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pareto/model.hpp"

namespace pareto {

struct TargetSums {
  std::vector<int> a;

  std::size_t k() const { return a.size(); }
};

// Permutations as 1-based values: pi[i-1] = pi(i).
struct Permutations {
  std::vector<int> pi;
  std::vector<int> theta;
};

inline constexpr std::size_t kDefaultMaxSolveK = 6;
inline constexpr std::int64_t kDefaultScale = 4;

TargetSums validate_2nmts(std::vector<int> a);

// First pair in lexicographic order of pi (theta is then forced).
std::optional<Permutations> solve_2nmts(const TargetSums& t,
                                        std::size_t max_k = kDefaultMaxSolveK);

// Index layout of a generated instance; i is 1-based throughout.
struct ReductionLayout {
  std::size_t k = 0;

  AgentIndex l(std::size_t i) const { return i - 1; }
  AgentIndex c(std::size_t i) const { return k + i - 1; }
  AgentIndex r(std::size_t i) const { return 2 * k + i - 1; }
  AgentIndex d() const { return 3 * k; }

  ObjectIndex f_left(std::size_t i) const { return i - 1; }
  ObjectIndex f_right(std::size_t i) const { return k + i - 1; }
  ObjectIndex g_left(std::size_t i) const { return 2 * k + i - 1; }
  ObjectIndex g_right(std::size_t i) const { return 3 * k + i - 1; }
  ObjectIndex h_left(std::size_t i) const { return 4 * k + i - 1; }
  ObjectIndex h_right(std::size_t i) const { return 5 * k + i - 1; }
  ObjectIndex g_center() const { return 6 * k; }
  ObjectIndex o() const { return 6 * k + 1; }

  std::size_t num_agents() const { return 3 * k + 1; }
  std::size_t num_objects() const { return 6 * k + 2; }
};

// Instance (with the endowment attached) and the endowment itself.
std::pair<Instance, Assignment> generate_instance(
    const TargetSums& t, std::int64_t scale = kDefaultScale);

// The explicit improvement built from a 2NMTS solution. Throws
// ValidationError if the permutations do not solve `t`, and logic_error if
// the result fails to dominate `p` under the instance's utilities.
Assignment construct_yes_improvement(const TargetSums& t,
                                     const Permutations& perms,
                                     const Instance& inst, const Assignment& p);

struct StructuredSearchStats {
  std::uint64_t nodes = 0;
};

// Exhaustive search over assignments that give every agent exactly two
// objects it values above zero, pruning branches in which some agent can no
// longer reach its utility in `p`. Throws ResourceError after `budget`
// search nodes.
std::optional<Assignment> search_improvement_structured(
    const Instance& inst, const Assignment& p, std::uint64_t budget,
    StructuredSearchStats* stats = nullptr);

}  // namespace pareto

#endif  // PARETO_HARDNESS_HPP_
