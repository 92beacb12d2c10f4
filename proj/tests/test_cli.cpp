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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pareto/cli.hpp"
#include "pareto/io.hpp"
#include "pareto/verdict.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace pareto {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return fixture::data_path(name + ".json"); }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "pareto_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

bool single_line(const std::string& s) {
  return !s.empty() && s.find('\n') == s.size() - 1;
}

TEST_CASE("check: lexicographic sample") {
  const Run r = run({"check", "--mode", "lex", "--instance", data("lexicographic")});
  CHECK(r.code == kExitNegative);
  const Json v = parse_json(r.out);
  CHECK(v["optimal"] == false);
  CHECK(v["certificate"]["kind"] == "cycle");
  CHECK(v["certificate"]["assignment"] ==
        parse_json(R"({"1": ["o2", "o3"], "2": ["o1"], "3": ["o4", "o5"]})"));
  CHECK(v["certificate"]["moves"].size() == 2);

  // The certificate re-validates when fed back.
  const std::string path = write("v2.json", r.out);
  const Run verify = run({"check", "--instance", data("lexicographic"), "--verify", path});
  CHECK(verify.code == kExitOk);
  CHECK(verify.out == "valid\n");
}

TEST_CASE("check: identical-order sample, ordinal modes") {
  const Run nec = run({"check", "--mode", "necessary-po", "--instance", data("identical")});
  CHECK(nec.code == kExitNegative);
  const Json v = parse_json(nec.out);
  CHECK(v["certificate"]["kind"] == "swap");
  CHECK(v["certificate"]["taker"] == "2");
  CHECK(v["certificate"]["pair"] == parse_json(R"(["o2", "o3"])"));
  CHECK(v["certificate"]["gained"] == "o1");
  const Run pos = run({"check", "--mode", "possible-po", "--instance", data("identical")});
  CHECK(pos.code == kExitOk);
  CHECK(parse_json(pos.out)["certificate"].is_null());
}

TEST_CASE("check: certificate path, explicit assignment, verify of all kinds") {
  const std::string cert = (scratch() / "v1.json").string();
  const std::string q = write("q1.json", R"({"1": ["o2", "o3", "o5"], "2": ["o1"], "3": ["o4"]})");
  Run r = run({"check", "--mode", "additive", "--instance", data("additive"), "--assignment", q,
               "--certificate", cert});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(parse_json(gen::read_text(cert))["optimal"] == true);

  for (const auto& [k, mode] : std::vector<std::pair<std::string, std::string>>{
           {"additive", "additive"}, {"lexicographic", "lex"}, {"bivalued", "bivalued"},
           {"identical", "necessary-po"}}) {
    r = run({"check", "--mode", mode, "--instance", data(k), "--certificate", cert});
    CHECK(r.code == kExitNegative);
    CHECK(run({"check", "--instance", data(k), "--verify", cert}).code == kExitOk);
    // Against a different assignment the certificate no longer dominates.
    const Instance inst = fixture::load(k);
    const Assignment all(inst.num_agents(),
                         std::vector<AgentIndex>(inst.num_objects(), 0));
    const std::string other = write("all.json", serialize_assignment(inst, all));
    CHECK(run({"check", "--instance", data(k), "--assignment", other, "--verify", cert}).code ==
          kExitNegative);
  }
}

TEST_CASE("check: input errors exit 2 with one line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "--mode", "lex", "--instance", "/no/such/file"},
           {"check", "--mode", "additive", "--instance", data("lexicographic")},
           {"check", "--mode", "bivalued", "--instance", data("additive")},
           {"check", "--mode", "magic", "--instance", data("additive")},
           {"check", "--instance", data("additive")},
           {"check", "--mode", "lex"},
           {"check", "--mode", "lex", "--instance", write("bad.json", "{")},
           {"check", "--mode", "lex", "--instance", data("lexicographic"), "--assignment",
            write("dup.json", R"({"1": ["o1", "o1"]})")},
           {"frobnicate"},
           {}}) {
    const Run r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == kExitError);
    CHECK(single_line(r.err));
  }
  const Run r = run({"check", "--mode", "additive", "--instance", data("additive"), "--max-table", "4"});
  CHECK(r.code == kExitError);
  CHECK(r.err.rfind("resource limit exceeded", 0) == 0);
}

TEST_CASE("improve") {
  Run r = run({"improve", "--mode", "lex", "--instance", data("lexicographic")});
  CHECK(r.code == kExitOk);
  CHECK(parse_json(r.out) == parse_json(R"({"1": ["o2", "o3"], "2": ["o1"], "3": ["o4", "o5"]})"));

  r = run({"improve", "--mode", "bivalued", "--instance", data("bivalued")});
  CHECK(r.code == kExitOk);
  CHECK(parse_json(r.out) == parse_json(R"({"1": ["o1", "o3"], "2": ["o2", "o4"], "3": ["o5", "o6"]})"));

  const std::string opt = write("opt3.json", r.out);
  r = run({"improve", "--mode", "bivalued", "--to-optimal", "--instance", data("bivalued"),
           "--assignment", opt});
  CHECK(r.code == kExitOk);
  CHECK(parse_json(r.out) == parse_json(gen::read_text(opt)));
  r = run({"improve", "--mode", "bivalued", "--instance", data("bivalued"), "--assignment", opt});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.empty());

  r = run({"improve", "--mode", "lex", "--to-optimal", "--instance", data("lexicographic")});
  CHECK(r.code == kExitOk);
  const Instance e2 = fixture::load("lexicographic");
  CHECK(run_check(e2, parse_assignment(e2, r.out), Mode::kLex).optimal);

  CHECK(run({"improve", "--mode", "additive", "--instance", data("additive")}).code == kExitError);
}

TEST_CASE("solve") {
  Run r = run({"solve", "--instance", data("additive")});
  CHECK(r.code == kExitOk);
  const Instance e1 = fixture::load("additive");
  CHECK(utility_vector(e1, parse_assignment(e1, r.out)) == fixture::ints({13, 9, 6}));

  const std::string solo = write("solo.json", R"({"agents": ["a"], "objects": ["x", "y"],
    "utilities": {"a": {"x": "1", "y": "2"}}, "endowment": {"a": ["x", "y"]}})");
  r = run({"solve", "--instance", solo});
  CHECK(r.code == kExitOk);
  CHECK(parse_json(r.out) == parse_json(R"({"a": ["x", "y"]})"));

  r = run({"solve", "--instance", data("lexicographic")});
  CHECK(r.code == kExitError);
  r = run({"solve", "--instance", data("additive"), "--max-table", "2"});
  CHECK(r.code == kExitError);
  CHECK(r.err.rfind("resource limit exceeded", 0) == 0);
}

TEST_CASE("gen 2nmts") {
  const std::string inst_path = (scratch() / "g.json").string();
  const std::string end_path = (scratch() / "e.json").string();
  Run r = run({"gen", "2nmts", "--targets", "3,3", "--scale", "4", "--expect",
               "--instance-out", inst_path, "--endowment-out", end_path});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "yes\n");
  const Instance g = parse_instance(gen::read_text(inst_path));
  CHECK(g.num_agents() == 7);
  CHECK(parse_assignment(g, gen::read_text(end_path)) == *g.endowment());

  r = run({"gen", "2nmts", "--targets", "1,6,6,7", "--expect"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "no\n");

  r = run({"gen", "2nmts", "--targets", "2,4"});
  CHECK(r.code == kExitError);
  CHECK(single_line(r.err));

  CHECK(run({"gen", "2nmts", "--targets", "5,5,2"}).code == kExitError);
  r = run({"gen", "2nmts", "--targets", "5,5,2", "--sort"});
  CHECK(r.code == kExitOk);
  CHECK(parse_instance(r.out).num_agents() == 10);
  CHECK(run({"gen", "2nmts", "--targets", "3,3", "--scale", "2"}).code == kExitError);
}

TEST_CASE("oracle") {
  Run r = run({"oracle", "--kind", "dominator", "--instance", data("additive")});
  CHECK(r.code == kExitNegative);
  CHECK(parse_json(r.out)["dominated"] == true);
  r = run({"oracle", "--kind", "necessary-po", "--instance", data("identical")});
  CHECK(r.code == kExitNegative);
  CHECK(parse_json(r.out)["necessarily_optimal"] == false);
  r = run({"oracle", "--kind", "dominator", "--instance", data("additive"), "--budget", "10"});
  CHECK(r.code == kExitError);
  CHECK(run({"oracle", "--kind", "other", "--instance", data("additive")}).code == kExitError);
}

TEST_CASE("help") {
  const Run r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("check") != std::string::npos);
}

}  // namespace
}  // namespace pareto
