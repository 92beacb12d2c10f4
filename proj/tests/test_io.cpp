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

#include "doctest.h"
#include "pareto/error.hpp"
#include "pareto/hardness.hpp"
#include "pareto/io.hpp"
#include "pareto/verdict.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace pareto {
namespace {

TEST_CASE("instance round trip") {
  for (const char* name : {"additive", "lexicographic", "bivalued", "identical"}) {
    const Instance inst = fixture::load(name);
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
  const auto [gen, endowment] = generate_instance(validate_2nmts({2, 5, 5}));
  CHECK(parse_instance(serialize_instance(gen)) == gen);
  gen::Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    const Instance a = gen::random_ordinal(rng, 3, 4);
    CHECK(parse_instance(serialize_instance(a)) == a);
    const Instance b = gen::random_additive(rng, 2, 4);
    CHECK(parse_instance(serialize_instance(b)) == b);
    const Assignment p = gen::random_assignment(rng, 2, 4);
    CHECK(parse_assignment(b, serialize_assignment(b, p)) == p);
  }
}

TEST_CASE("assignment documents") {
  const Instance inst = fixture::load("additive");
  const Assignment p = parse_assignment(inst, R"({"1": ["o4", "o2"], "2": ["o1"], "3": ["o5", "o3"]})");
  CHECK(p == *inst.endowment());
  // Agents left out hold nothing.
  const Assignment all = parse_assignment(inst, R"({"3": ["o1", "o2", "o3", "o4", "o5"]})");
  CHECK(all.bundle(0).empty());
  CHECK(all.bundle(2).size() == 5);
  CHECK(serialize_assignment(inst, p) ==
        "{\n  \"1\": [\n    \"o2\",\n    \"o4\"\n  ],\n  \"2\": [\n    \"o1\"\n  ],\n"
        "  \"3\": [\n    \"o3\",\n    \"o5\"\n  ]\n}");
  CHECK_THROWS_WITH_AS(parse_assignment(inst, R"({"1": ["o2"]})"),
                       doctest::Contains("object missing"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_assignment(inst, R"({"1": ["o9"]})"),
                       doctest::Contains("unknown object"), ValidationError);
  CHECK_THROWS_AS(parse_assignment(inst, "[]"), ValidationError);
}

TEST_CASE("utilities must cover every agent and object") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"agents": ["1", "2"], "objects": ["a"],
    "utilities": {"1": {"a": "1"}}})"),
                       doctest::Contains("has no utilities"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"agents": ["1"], "objects": ["a", "b"],
    "utilities": {"1": {"a": "1"}}})"),
                       doctest::Contains("no utility for object"), ValidationError);
  CHECK_THROWS_AS(parse_instance(R"({"agents": ["1"], "objects": ["a"],
    "utilities": {"1": {"a": 1}}})"),
                  ValidationError);
}

TEST_CASE("verdict round trip for every certificate kind") {
  struct Case {
    std::string name;
    Mode mode;
  };
  for (const Case c : {Case{"additive", Mode::kAdditive}, Case{"lexicographic", Mode::kLex},
                       Case{"lexicographic", Mode::kPossiblePo}, Case{"bivalued", Mode::kBivalued},
                       Case{"identical", Mode::kNecessaryPo}, Case{"identical", Mode::kPossiblePo}}) {
    const Instance inst = fixture::load(c.name);
    const Assignment p = *inst.endowment();
    const Verdict v = run_check(inst, p, c.mode);
    const Json doc = verdict_to_json(inst, v);
    CHECK(verdict_from_json(inst, parse_json(doc.dump())) == v);
    CHECK(v.optimal == !v.certificate.has_value());
    if (v.certificate) CHECK(verify_certificate(inst, p, *v.certificate));
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Instance e2 = fixture::load("lexicographic");
  const Assignment p2 = *e2.endowment();
  Verdict v = run_check(e2, p2, Mode::kLex);
  auto cycle = std::get<CycleCertificate>(*v.certificate);
  cycle.assignment = p2;
  CHECK_FALSE(verify_certificate(e2, p2, cycle));
  cycle = std::get<CycleCertificate>(*v.certificate);
  cycle.cycle.steps = {0, 1};
  CHECK_FALSE(verify_certificate(e2, p2, cycle));

  const Instance e4 = fixture::load("identical");
  const Assignment p4 = *e4.endowment();
  auto swap = std::get<SwapCertificate>(*run_check(e4, p4, Mode::kNecessaryPo).certificate);
  CHECK(verify_certificate(e4, p4, swap));
  swap.witness_utilities[1] = fixture::ints({3, 3, 2, 1});
  CHECK_FALSE(verify_certificate(e4, p4, swap));

  const Instance e1 = fixture::load("additive");
  CHECK_FALSE(verify_certificate(e1, *e1.endowment(), DominatingAssignment{*e1.endowment()}));

  CHECK_THROWS_AS(certificate_from_json(e1, parse_json(R"({"kind": "nope", "assignment": {}})")),
                  ValidationError);
  CHECK_THROWS_AS(verdict_from_json(e1, parse_json(
                                            R"({"mode": "additive", "optimal": false,
                                                "certificate": null, "diagnostics": []})")),
                  ValidationError);
}

TEST_CASE("certificate documents and improve") {
  const Instance inst = fixture::load("lexicographic");
  const Assignment p = *inst.endowment();
  const Verdict v = run_check(inst, p, Mode::kLex);
  REQUIRE(v.certificate);
  CHECK(certificate_from_document(inst, verdict_to_json(inst, v)) == *v.certificate);
  CHECK(certificate_from_document(inst, certificate_to_json(inst, *v.certificate)) ==
        *v.certificate);
  CHECK_THROWS_AS(
      certificate_from_document(inst, verdict_to_json(inst, Verdict{Mode::kLex, true, {}, {}})),
      ValidationError);

  const auto step = improve(inst, p, Mode::kLex, false);
  REQUIRE(step);
  CHECK(step->rounds == 1);
  CHECK(step->assignment == improved_assignment(*v.certificate));
  const auto full = improve(inst, p, Mode::kLex, true);
  REQUIRE(full);
  CHECK(run_check(inst, full->assignment, Mode::kLex).optimal);
  CHECK_FALSE(improve(inst, full->assignment, Mode::kLex, false));
  CHECK(improve(inst, full->assignment, Mode::kLex, true)->rounds == 0);
  CHECK_THROWS_AS(improve(inst, p, Mode::kAdditive, false), ValidationError);

  const Instance biv = fixture::load("bivalued");
  const auto b = improve(biv, *biv.endowment(), Mode::kBivalued, true);
  REQUIRE(b);
  CHECK(run_check(biv, b->assignment, Mode::kBivalued).optimal);
}

TEST_CASE("mode names") {
  for (Mode m : {Mode::kAdditive, Mode::kLex, Mode::kBivalued, Mode::kPossiblePo,
                 Mode::kNecessaryPo}) {
    CHECK(parse_mode(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_mode("pareto"), ValidationError);
}

}  // namespace
}  // namespace pareto
