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

#include "pareto/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "pareto/additive.hpp"
#include "pareto/bivalued.hpp"
#include "pareto/error.hpp"
#include "pareto/hardness.hpp"
#include "pareto/io.hpp"
#include "pareto/lexgraph.hpp"
#include "pareto/ordinal.hpp"
#include "pareto/verdict.hpp"

namespace pareto {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_document(const std::string& path, const std::string& text,
                    std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << text << '\n';
  if (!file) throw ValidationError("cannot write '" + path + "'");
}

std::string describe(const Instance& inst, const Assignment& p) {
  std::string s = "(";
  const std::vector<Bundle> bundles = p.bundles();
  for (AgentIndex i = 0; i < bundles.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < bundles[i].size(); ++j) {
      if (j) s += ' ';
      s += inst.object_name(bundles[i][j]);
    }
  }
  return s + ")";
}

struct Inputs {
  std::string instance_path;
  std::string assignment_path;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--instance", in.instance_path, "instance document")
      ->required();
  cmd->add_option("--assignment", in.assignment_path,
                  "assignment document (default: the instance's endowment)");
}

std::pair<Instance, Assignment> load(const Inputs& in) {
  Instance inst = parse_instance(read_file(in.instance_path));
  if (!in.assignment_path.empty()) {
    Assignment p = parse_assignment(inst, read_file(in.assignment_path));
    return {std::move(inst), std::move(p)};
  }
  if (!inst.endowment()) {
    throw ValidationError("no --assignment given and the instance has no endowment");
  }
  Assignment p = *inst.endowment();
  return {std::move(inst), std::move(p)};
}

struct CheckArgs {
  Inputs in;
  std::string mode;
  std::string certificate_path;
  std::string verify_path;
  std::size_t max_table = kDefaultMaxTableEntries;
};

int run_check_command(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto [inst, p] = load(a.in);
  if (!a.verify_path.empty()) {
    const Certificate cert =
        certificate_from_document(inst, parse_json(read_file(a.verify_path)));
    const bool ok = verify_certificate(inst, p, cert);
    out << (ok ? "valid" : "invalid") << '\n';
    err << (ok ? "certificate re-validates: " : "certificate rejected: ")
        << describe(inst, improved_assignment(cert)) << '\n';
    return ok ? kExitOk : kExitNegative;
  }
  if (a.mode.empty()) throw ValidationError("--mode is required");
  const Mode mode = parse_mode(a.mode);
  const Verdict v = run_check(inst, p, mode, CheckOptions{a.max_table});
  write_document(a.certificate_path, verdict_to_json(inst, v).dump(2), out);
  err << a.mode << ": " << describe(inst, p)
      << (v.optimal ? " is Pareto optimal" : " is not Pareto optimal") << '\n';
  for (const std::string& d : v.diagnostics) err << "  " << d << '\n';
  if (v.certificate) {
    err << "  improvement " << describe(inst, improved_assignment(*v.certificate))
        << '\n';
  }
  return v.optimal ? kExitOk : kExitNegative;
}

struct ImproveArgs {
  Inputs in;
  std::string mode;
  bool to_optimal = false;
  std::string output_path;
};

int run_improve_command(const ImproveArgs& a, std::ostream& out,
                        std::ostream& err) {
  const auto [inst, p] = load(a.in);
  validate_assignment(inst, p);
  const Mode mode = parse_mode(a.mode);
  if (mode != Mode::kLex && mode != Mode::kBivalued) {
    throw ValidationError("improve supports --mode lex or bivalued, not '" +
                          a.mode + "'");
  }
  const std::optional<Improvement> result = improve(inst, p, mode, a.to_optimal);
  if (!result) {
    err << a.mode << ": " << describe(inst, p)
        << " is Pareto optimal, no improvement\n";
    return kExitNegative;
  }
  write_document(a.output_path, serialize_assignment(inst, result->assignment), out);
  err << a.mode << ": " << describe(inst, p) << " -> "
      << describe(inst, result->assignment) << " after " << result->rounds
      << (result->rounds == 1 ? " round" : " rounds") << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string instance_path;
  std::string output_path;
  std::size_t max_table = kDefaultMaxTableEntries;
};

int run_solve_command(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(a.instance_path));
  if (!inst.has_utilities()) throw ValidationError("solve needs utilities");
  if (!inst.endowment()) throw ValidationError("solve needs an endowment");
  const Assignment q = find_ir_po_assignment(inst, *inst.endowment(), a.max_table);
  write_document(a.output_path, serialize_assignment(inst, q), out);
  std::string vec;
  for (const Rational& u : utility_vector(inst, q)) {
    vec += (vec.empty() ? "" : ", ") + format_rational(u);
  }
  err << "solve: " << describe(inst, q) << " with utilities (" << vec << ")\n";
  return kExitOk;
}

struct GenArgs {
  std::vector<int> targets;
  std::int64_t scale = kDefaultScale;
  bool sort = false;
  bool expect = false;
  std::size_t max_k = kDefaultMaxSolveK;
  std::string instance_out;
  std::string endowment_out;
};

int run_gen_command(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<int> targets = a.targets;
  if (a.sort) std::sort(targets.begin(), targets.end());
  const TargetSums t = validate_2nmts(std::move(targets));
  const auto [inst, endowment] = generate_instance(t, a.scale);
  if (!a.instance_out.empty() || !a.expect) {
    write_document(a.instance_out, serialize_instance(inst), out);
  }
  if (!a.endowment_out.empty()) {
    write_document(a.endowment_out, serialize_assignment(inst, endowment), out);
  }
  err << "gen 2nmts: k=" << t.k() << ", " << inst.num_agents() << " agents, "
      << inst.num_objects() << " objects\n";
  if (a.expect) {
    const bool yes = solve_2nmts(t, a.max_k).has_value();
    out << (yes ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

struct OracleArgs {
  Inputs in;
  std::string kind;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

int run_oracle_command(const OracleArgs& a, std::ostream& out,
                       std::ostream& err) {
  const auto [inst, p] = load(a.in);
  Json doc;
  doc["kind"] = a.kind;
  bool optimal = true;
  if (a.kind == "dominator") {
    if (!inst.has_utilities()) throw ValidationError("dominator oracle needs utilities");
    const auto d = brute_force_dominator(inst, p, a.budget);
    optimal = !d.has_value();
    doc["dominated"] = !optimal;
    doc["assignment"] = d ? assignment_to_json(inst, d->assignment) : Json(nullptr);
  } else if (a.kind == "necessary-po") {
    const NecessaryOracleResult r = necessary_po_oracle(inst, p, a.budget);
    optimal = r.necessarily_optimal;
    doc["necessarily_optimal"] = optimal;
    doc["witness"] = r.witness ? assignment_to_json(inst, *r.witness) : Json(nullptr);
  } else {
    throw ValidationError("unknown oracle kind '" + a.kind + "'");
  }
  out << doc.dump(2) << '\n';
  err << "oracle " << a.kind << ": " << describe(inst, p)
      << (optimal ? " passes" : " fails") << '\n';
  return optimal ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Pareto-optimality tests for object assignments", "pareto-po"};
  app.require_subcommand(1);

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "decide Pareto optimality");
  add_inputs(check_cmd, check.in);
  check_cmd->add_option("--mode", check.mode,
                        "additive | lex | bivalued | possible-po | necessary-po");
  check_cmd->add_option("--certificate", check.certificate_path,
                        "write the verdict here instead of stdout");
  check_cmd->add_option("--max-table", check.max_table,
                        "additive mode: utility-vector table limit")
      ->capture_default_str();
  check_cmd->add_option("--verify", check.verify_path,
                        "re-validate a verdict or certificate document");

  ImproveArgs improve;
  CLI::App* improve_cmd = app.add_subcommand("improve", "compute a Pareto improvement");
  add_inputs(improve_cmd, improve.in);
  improve_cmd->add_option("--mode", improve.mode, "lex | bivalued")->required();
  improve_cmd->add_flag("--to-optimal", improve.to_optimal,
                        "repeat until Pareto optimal");
  improve_cmd->add_option("--output", improve.output_path, "output path");

  SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "individually rational Pareto optimal assignment");
  solve_cmd->add_option("--instance", solve.instance_path, "instance document")
      ->required();
  solve_cmd->add_option("--output", solve.output_path, "output path");
  solve_cmd->add_option("--max-table", solve.max_table, "utility-vector table limit")
      ->capture_default_str();

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "instance generators");
  gen_cmd->require_subcommand(1);
  CLI::App* nmts_cmd =
      gen_cmd->add_subcommand("2nmts", "reduction instance from target sums");
  nmts_cmd->add_option("--targets", gen.targets, "comma-separated a_1..a_k")
      ->required()
      ->delimiter(',');
  nmts_cmd->add_option("--scale", gen.scale, "utility scale (>= 3)")
      ->capture_default_str();
  nmts_cmd->add_flag("--sort", gen.sort, "sort the targets first");
  nmts_cmd->add_flag("--expect", gen.expect, "print whether the targets are solvable");
  nmts_cmd->add_option("--max-k", gen.max_k, "largest k --expect will solve")
      ->capture_default_str();
  nmts_cmd->add_option("--instance-out", gen.instance_out, "instance output path");
  nmts_cmd->add_option("--endowment-out", gen.endowment_out,
                       "endowment output path");

  OracleArgs oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference checks");
  add_inputs(oracle_cmd, oracle.in);
  oracle_cmd->add_option("--kind", oracle.kind, "dominator | necessary-po")->required();
  oracle_cmd->add_option("--budget", oracle.budget, "assignment enumeration limit")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help()
                                          : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (check_cmd->parsed()) return run_check_command(check, out, err);
    if (improve_cmd->parsed()) return run_improve_command(improve, out, err);
    if (solve_cmd->parsed()) return run_solve_command(solve, out, err);
    if (nmts_cmd->parsed()) return run_gen_command(gen, out, err);
    if (oracle_cmd->parsed()) return run_oracle_command(oracle, out, err);
  } catch (const ResourceError& e) {
    err << "resource limit exceeded: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: no command\n";
  return kExitError;
}

}  // namespace pareto
