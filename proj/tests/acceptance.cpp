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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pareto/additive.hpp"
#include "pareto/bivalued.hpp"
#include "pareto/cli.hpp"
#include "pareto/hardness.hpp"
#include "pareto/io.hpp"
#include "pareto/lexgraph.hpp"
#include "pareto/ordinal.hpp"
#include "pareto/verdict.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace pareto {
namespace {

// Collects the first failed expectation of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t count() const { return count_; }

 private:
  std::string failure_;
  std::size_t count_ = 0;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

void lexicographic_golden(Check& c) {
  const Instance inst = fixture::load("lexicographic");
  const Assignment p = fixture::assign(inst, {{"o2", "o4"}, {"o1"}, {"o3", "o5"}});
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli({"check", "--mode", "lex", "--instance", fixture::data_path("lexicographic.json")},
                           out, err);
  c.expect(code == kExitNegative, "check --mode lex exits 1");
  const Verdict v = verdict_from_json(inst, parse_json(out.str()));
  c.expect(!v.optimal, "verdict is not optimal");
  if (!v.certificate) return;
  const auto* cycle = std::get_if<CycleCertificate>(&*v.certificate);
  c.expect(cycle != nullptr, "certificate is a cycle");
  if (!cycle) return;
  const Assignment q = apply_cycle(p, build_graph(inst, p), cycle->cycle);
  c.expect(q == cycle->assignment, "applying the cycle reproduces the certificate");
  const UtilityTable lex = make_lex_utilities(inst);
  c.expect(pareto_dominates(utility_vector(lex, q), utility_vector(lex, p)),
           "improvement dominates under lexicographic utilities");
  c.expect(q == fixture::assign(inst, {{"o2", "o3"}, {"o1"}, {"o4", "o5"}}),
           "improvement is (o2o3|o1|o4o5)");
}

void bivalued_golden(Check& c) {
  const Instance inst = fixture::load("bivalued");
  const BivaluedView view = classify_bivalued(inst);
  const Assignment p = fixture::assign(inst, {{"o1", "o4"}, {"o2", "o5"}, {"o3", "o6"}});
  const FlowResult g1 = max_flow(build_flow_network(view, p, 0));
  c.expect(g1.value == 5, "max flow on G_1 is 5");
  const auto imp = find_improvement_bivalued(view, p);
  c.expect(imp.has_value(), "an improvement exists");
  if (!imp) return;
  c.expect(imp->flow_value == 5, "certificate flow value is 5");
  c.expect(pareto_dominates(utility_vector(inst, imp->assignment), utility_vector(inst, p)),
           "improvement dominates p");
  c.expect(imp->assignment == fixture::assign(inst, {{"o1", "o3"}, {"o2", "o4"}, {"o5", "o6"}}),
           "improvement is (o1o3|o2o4|o5o6)");
}

void identical_golden(Check& c) {
  const Instance inst = fixture::load("identical");
  const Assignment p = fixture::assign(inst, {{"o1", "o4"}, {"o2", "o3"}});
  c.expect(test_possible_po(inst, p).optimal, "possibly Pareto optimal");
  const PoResult nec = test_necessary_po(inst, p);
  c.expect(!nec.optimal, "not necessarily Pareto optimal");
  if (!nec.certificate) return;
  const auto* swap = std::get_if<SwapCertificate>(&*nec.certificate);
  c.expect(swap != nullptr, "certificate is a swap");
  if (!swap) return;
  const SwapWitness& w = swap->witness;
  c.expect(inst.agent_name(w.taker) == "2" && inst.object_name(w.gained) == "o1" &&
               inst.object_name(w.pair_better) == "o2" &&
               inst.object_name(w.pair_worse) == "o3",
           "swap names o1 >_2 o2 >=_2 o3");
  const UtilityTable witness = utilities_from_json(
      inst, parse_json(gen::read_text(fixture::data_path("identical_witness.json"))));
  c.expect(is_swap_witness_profile(inst, w, witness), "stored table is a witness profile");
  c.expect(pareto_dominates(utility_vector(witness, apply_swap(p, w)), utility_vector(witness, p)),
           "p is dominated under the stored table");
  c.expect(verify_certificate(inst, p, *nec.certificate), "certificate re-validates");
}

void oracle_equivalence(Check& c) {
  gen::Rng rng(20260001);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const std::size_t m = gen::uniform(rng, 1, 5);
    const Instance inst = gen::random_additive(rng, n, m, 1, 10);
    const Assignment p = gen::random_assignment(rng, n, m);
    const std::string tag = " (round " + std::to_string(round) + ")";
    c.expect(test_po_additive(inst, p).optimal == !brute_force_dominator(inst, p),
             "(a) additive DP vs brute force" + tag);
    const Instance lex = inst.with_utilities(make_lex_utilities(inst));
    c.expect(test_po_lex(inst, p).optimal == !brute_force_dominator(lex, p),
             "(b) lex graph vs brute force" + tag);
    c.expect(test_necessary_po(inst, p).optimal == necessary_po_oracle(inst, p).necessarily_optimal,
             "(c) necessary characterization vs oracle" + tag);
  }
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const std::size_t m = gen::uniform(rng, 1, 6);
    const Instance inst = gen::random_bivalued(rng, n, m);
    const Assignment p = gen::random_assignment(rng, n, m);
    c.expect(test_po_bivalued(classify_bivalued(inst), p).optimal ==
                 !brute_force_dominator(inst, p),
             "(d) flow vs brute force (round " + std::to_string(round) + ")");
  }
}

void dp_completeness(Check& c) {
  gen::Rng rng(20260002);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    const std::size_t m = gen::uniform(rng, 0, 5);
    const Instance inst = gen::random_additive(rng, n, m, 1, 10);
    std::set<UtilityVector> table;
    for (const auto& e : enumerate_feasible_vectors(inst).entries) table.insert(e.vector);
    std::set<UtilityVector> brute;
    std::vector<AgentIndex> owners(m, 0);
    for (;;) {
      brute.insert(utility_vector(inst, Assignment(n, owners)));
      std::size_t pos = m;
      while (pos > 0 && ++owners[pos - 1] == n) owners[--pos] = 0;
      if (pos == 0) break;
    }
    c.expect(table == brute, "vector set equals brute force");
    const Assignment e = gen::random_assignment(rng, n, m);
    const Assignment q = find_ir_po_assignment(inst, e);
    const UtilityVector qv = utility_vector(inst, q);
    const UtilityVector ev = utility_vector(inst, e);
    bool ir = true;
    for (std::size_t i = 0; i < n; ++i) ir = ir && qv[i] >= ev[i];
    c.expect(ir, "IR output");
    c.expect(test_po_additive(inst, q).optimal, "IR output is Pareto optimal");
  }
}

void sd_equals_rs(Check& c) {
  gen::Rng rng(20260003);
  for (int round = 0; round < 100; ++round) {
    const std::size_t m = gen::uniform(rng, 1, 6);
    const Instance inst = gen::random_ordinal(rng, 2, m);
    for (AgentIndex i = 0; i < 2; ++i) {
      for (unsigned a = 0; a < (1u << m); ++a) {
        for (unsigned b = 0; b < (1u << m); ++b) {
          Bundle A;
          Bundle B;
          for (ObjectIndex o = 0; o < m; ++o) {
            if (a >> o & 1) A.push_back(o);
            if (b >> o & 1) B.push_back(o);
          }
          c.expect(sd_compare(inst, i, A, B) == rs_compare(inst, i, A, B), "sd == rs");
        }
      }
    }
  }
}

void hardness_yes(Check& c) {
  for (const auto& a : std::vector<std::vector<int>>{{3, 3}, {2, 5, 5}, {3, 4, 5}, {4, 4, 4}}) {
    const TargetSums t = validate_2nmts(a);
    const auto [inst, p] = generate_instance(t);
    const auto perms = solve_2nmts(t);
    c.expect(perms.has_value(), "targets solvable");
    if (!perms) continue;
    const Assignment q = construct_yes_improvement(t, *perms, inst, p);
    const UtilityVector before = utility_vector(inst, p);
    const UtilityVector after = utility_vector(inst, q);
    const AgentIndex d = ReductionLayout{t.k()}.d();
    for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
      c.expect(i == d ? after[i] > before[i] : after[i] == before[i],
               "agent " + inst.agent_name(i) + " at endowment level, d strictly better");
    }
  }
}

void hardness_equivalence(Check& c) {
  // Every sorted vector over [1, 2k-1] summing to k(k+1), for k = 2 and 3.
  std::vector<std::vector<int>> targets;
  for (int k = 2; k <= 3; ++k) {
    std::vector<int> a(k, 1);
    for (;;) {
      if (std::is_sorted(a.begin(), a.end()) &&
          std::accumulate(a.begin(), a.end(), 0) == k * (k + 1)) {
        targets.push_back(a);
      }
      int pos = k;
      while (pos > 0 && ++a[pos - 1] > 2 * k - 1) a[--pos] = 1;
      if (pos == 0) break;
    }
  }
  std::size_t yes = 0;
  for (const auto& a : targets) {
    const TargetSums t = validate_2nmts(a);
    const auto [inst, p] = generate_instance(t);
    const auto q = search_improvement_structured(inst, p, 100'000'000);
    const bool solvable = solve_2nmts(t).has_value();
    yes += solvable;
    c.expect(q.has_value() == solvable, "structured search matches solver");
    if (q) {
      c.expect(pareto_dominates(utility_vector(inst, *q), utility_vector(inst, p)),
               "found assignment dominates");
    }
  }
  // Only (3,3), (2,5,5), (3,4,5), (4,4,4) qualify, and all are solvable.
  c.expect(targets.size() == 4 && yes == 4, "four valid small targets, all solvable");
  const TargetSums no = validate_2nmts({1, 6, 6, 7});
  const auto [inst, p] = generate_instance(no);
  c.expect(!solve_2nmts(no).has_value(), "(1,6,6,7) has no solution");
  // Budget well inside the 10-minute allowance.
  c.expect(!search_improvement_structured(inst, p, 2'000'000'000).has_value(),
           "no improvement for (1,6,6,7)");
}

void monotone_termination(Check& c) {
  gen::Rng rng(20260009);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = gen::uniform(rng, 1, 5);
    const std::size_t m = gen::uniform(rng, 1, 12);
    const Instance inst = gen::random_bivalued(rng, n, m, round % 2 ? Rational(3) : Rational(2));
    const BivaluedView view = classify_bivalued(inst);
    const Assignment p = gen::random_assignment(rng, n, m);
    std::vector<Assignment> trace;
    const Assignment q = optimize_bivalued(view, p, &trace);
    c.expect(trace.size() - 1 <= m, "at most m rounds");
    for (std::size_t r = 1; r < trace.size(); ++r) {
      c.expect(view.total_top_count(trace[r]) > view.total_top_count(trace[r - 1]),
               "top count strictly increases");
      c.expect(pareto_dominates(utility_vector(inst, trace[r]), utility_vector(inst, trace[r - 1])),
               "each round is a Pareto improvement");
    }
    c.expect(!find_improvement_bivalued(view, q).has_value(), "fixpoint reached");
  }
}

}  // namespace
}  // namespace pareto

int main() {
  using namespace pareto;
  const std::vector<Criterion> criteria = {
      {1, "lex golden: (o2o4|o1|o3o5) yields a dominating cycle", 1, lexicographic_golden},
      {2, "bivalued golden: flow value 5 for focus 1, dominating improvement", 1, bivalued_golden},
      {3, "ordinal golden: possibly but not necessarily optimal, swap witness", 1,
       identical_golden},
      {4, "Oracle equivalence on 500+500 random instances", 300, oracle_equivalence},
      {5, "DP vector set and IR optimum on 200 random instances", 120, dp_completeness},
      {6, "SD and RS agree on all bundle pairs of 100 profiles", 120, sd_equals_rs},
      {7, "Reduction yes-instances dominated by the constructed assignment", 4, hardness_yes},
      {8, "Structured search matches 2NMTS for k=2,3 and the k=4 no-instance", 600,
       hardness_equivalence},
      {9, "optimize_bivalued terminates in at most m monotone rounds", 60, monotone_termination},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) {
      check.expect(false, "time limit of " + std::to_string(cr.limit_seconds) + " s exceeded");
    }
    const bool ok = check.ok();
    failed += !ok;
    std::printf("%s criterion %d: %s [%zu checks, %.2f s]%s%s\n", ok ? "PASS" : "FAIL", cr.id,
                cr.title, check.count(), secs, ok ? "" : " -- ", check.failure().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
