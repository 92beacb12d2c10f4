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

#include "pareto/verdict.hpp"

#include <sstream>
#include <variant>

#include "pareto/bivalued.hpp"
#include "pareto/error.hpp"
#include "pareto/lexgraph.hpp"
#include "pareto/ordinal.hpp"

namespace pareto {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_vector(const UtilityVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << (i ? ", " : "") << format_rational(v[i]);
  }
  out << ')';
  return out.str();
}

AgentIndex agent_from(const Instance& inst, const Json& v) {
  if (!v.is_string()) throw ValidationError("agent name must be a string");
  const auto found = inst.find_agent(v.get<std::string>());
  if (!found) throw ValidationError("unknown agent '" + v.get<std::string>() + "'");
  return *found;
}

ObjectIndex object_from(const Instance& inst, const Json& v) {
  if (!v.is_string()) throw ValidationError("object name must be a string");
  const auto found = inst.find_object(v.get<std::string>());
  if (!found) throw ValidationError("unknown object '" + v.get<std::string>() + "'");
  return *found;
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("certificate lacks field '") + key + "'");
  }
  return doc.at(key);
}

}  // namespace

const Assignment& improved_assignment(const Certificate& cert) {
  return std::visit([](const auto& c) -> const Assignment& { return c.assignment; },
                    cert);
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kAdditive:
      return "additive";
    case Mode::kLex:
      return "lex";
    case Mode::kBivalued:
      return "bivalued";
    case Mode::kPossiblePo:
      return "possible-po";
    case Mode::kNecessaryPo:
      return "necessary-po";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::kAdditive, Mode::kLex, Mode::kBivalued, Mode::kPossiblePo,
                 Mode::kNecessaryPo}) {
    if (to_string(m) == text) return m;
  }
  throw ValidationError("unknown mode '" + std::string(text) + "'");
}

Verdict run_check(const Instance& inst, const Assignment& p, Mode mode,
                  const CheckOptions& options) {
  validate_assignment(inst, p);
  Verdict verdict;
  verdict.mode = mode;
  PoResult result;
  switch (mode) {
    case Mode::kAdditive: {
      const UtilityVector base = utility_vector(inst, p);
      verdict.diagnostics.push_back("utility vector " + format_vector(base));
      result = test_po_additive(inst, p, options.max_table);
      if (result.certificate) {
        verdict.diagnostics.push_back(
            "dominating vector " +
            format_vector(utility_vector(inst, improved_assignment(*result.certificate))));
      }
      break;
    }
    case Mode::kLex:
    case Mode::kPossiblePo: {
      const ImprovementGraph g = build_graph(inst, p);
      verdict.diagnostics.push_back("improvement graph: " +
                                    std::to_string(g.num_edges()) + " edges");
      result = mode == Mode::kLex ? test_po_lex(inst, p) : test_possible_po(inst, p);
      break;
    }
    case Mode::kBivalued: {
      const BivaluedView view = classify_bivalued(inst);
      verdict.diagnostics.push_back("top objects held: " +
                                    std::to_string(view.total_top_count(p)));
      result = test_po_bivalued(view, p);
      if (result.certificate) {
        const auto& flow = std::get<FlowImprovement>(*result.certificate);
        verdict.diagnostics.push_back("focus agent " + inst.agent_name(flow.focus) +
                                      ", flow value " +
                                      std::to_string(flow.flow_value));
      }
      break;
    }
    case Mode::kNecessaryPo:
      result = test_necessary_po(inst, p);
      break;
  }
  verdict.optimal = result.optimal;
  verdict.certificate = std::move(result.certificate);
  return verdict;
}

Json certificate_to_json(const Instance& inst, const Certificate& cert) {
  Json doc;
  std::visit(
      Overloaded{
          [&](const DominatingAssignment&) { doc["kind"] = "dominating_assignment"; },
          [&](const CycleCertificate& c) {
            doc["kind"] = "cycle";
            Json steps = Json::array();
            for (ObjectIndex o : c.cycle.steps) steps.push_back(inst.object_name(o));
            doc["cycle"] = std::move(steps);
            doc["strict_index"] = c.cycle.strict_index;
            Json moves = Json::array();
            for (const CycleMove& m : c.moves) {
              moves.push_back({{"object", inst.object_name(m.object)},
                               {"from", inst.agent_name(m.from)},
                               {"to", inst.agent_name(m.to)}});
            }
            doc["moves"] = std::move(moves);
          },
          [&](const SwapCertificate& c) {
            doc["kind"] = "swap";
            doc["taker"] = inst.agent_name(c.witness.taker);
            doc["giver"] = inst.agent_name(c.witness.giver);
            doc["pair"] = {inst.object_name(c.witness.pair_better),
                           inst.object_name(c.witness.pair_worse)};
            doc["gained"] = inst.object_name(c.witness.gained);
            doc["witness_utilities"] = utilities_to_json(inst, c.witness_utilities);
          },
          [&](const FlowImprovement& c) {
            doc["kind"] = "flow_improvement";
            doc["focus"] = inst.agent_name(c.focus);
            doc["flow_value"] = c.flow_value;
          },
      },
      cert);
  doc["assignment"] = assignment_to_json(inst, improved_assignment(cert));
  return doc;
}

Certificate certificate_from_json(const Instance& inst, const Json& doc) {
  const Json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ValidationError("certificate kind must be a string");
  Assignment assignment = assignment_from_json(inst, field(doc, "assignment"));
  const std::string k = kind.get<std::string>();
  if (k == "dominating_assignment") {
    return DominatingAssignment{std::move(assignment)};
  }
  if (k == "cycle") {
    CycleCertificate c;
    for (const Json& o : field(doc, "cycle")) c.cycle.steps.push_back(object_from(inst, o));
    const Json& strict = field(doc, "strict_index");
    if (!strict.is_number_unsigned()) {
      throw ValidationError("strict_index must be a non-negative integer");
    }
    c.cycle.strict_index = strict.get<std::size_t>();
    for (const Json& m : field(doc, "moves")) {
      c.moves.push_back({object_from(inst, field(m, "object")),
                         agent_from(inst, field(m, "from")),
                         agent_from(inst, field(m, "to"))});
    }
    c.assignment = std::move(assignment);
    return c;
  }
  if (k == "swap") {
    SwapCertificate c;
    c.witness.taker = agent_from(inst, field(doc, "taker"));
    c.witness.giver = agent_from(inst, field(doc, "giver"));
    const Json& pair = field(doc, "pair");
    if (!pair.is_array() || pair.size() != 2) {
      throw ValidationError("swap pair must list two objects");
    }
    c.witness.pair_better = object_from(inst, pair[0]);
    c.witness.pair_worse = object_from(inst, pair[1]);
    c.witness.gained = object_from(inst, field(doc, "gained"));
    c.witness_utilities = utilities_from_json(inst, field(doc, "witness_utilities"));
    c.assignment = std::move(assignment);
    return c;
  }
  if (k == "flow_improvement") {
    FlowImprovement c;
    c.focus = agent_from(inst, field(doc, "focus"));
    const Json& value = field(doc, "flow_value");
    if (!value.is_number_integer()) throw ValidationError("flow_value must be an integer");
    c.flow_value = value.get<std::int64_t>();
    c.assignment = std::move(assignment);
    return c;
  }
  throw ValidationError("unknown certificate kind '" + k + "'");
}

Json verdict_to_json(const Instance& inst, const Verdict& verdict) {
  Json doc;
  doc["mode"] = std::string(to_string(verdict.mode));
  doc["optimal"] = verdict.optimal;
  doc["certificate"] = verdict.certificate
                           ? certificate_to_json(inst, *verdict.certificate)
                           : Json(nullptr);
  doc["diagnostics"] = verdict.diagnostics;
  return doc;
}

Verdict verdict_from_json(const Instance& inst, const Json& doc) {
  if (!doc.is_object()) throw ValidationError("verdict must be a JSON object");
  Verdict v;
  const Json& mode = field(doc, "mode");
  if (!mode.is_string()) throw ValidationError("mode must be a string");
  v.mode = parse_mode(mode.get<std::string>());
  const Json& optimal = field(doc, "optimal");
  if (!optimal.is_boolean()) throw ValidationError("optimal must be a boolean");
  v.optimal = optimal.get<bool>();
  const Json& cert = field(doc, "certificate");
  if (!cert.is_null()) v.certificate = certificate_from_json(inst, cert);
  if (v.optimal == v.certificate.has_value()) {
    throw ValidationError("certificate must be present iff the verdict is not optimal");
  }
  if (doc.contains("diagnostics")) {
    for (const Json& d : doc.at("diagnostics")) {
      if (!d.is_string()) throw ValidationError("diagnostics must be strings");
      v.diagnostics.push_back(d.get<std::string>());
    }
  }
  return v;
}

bool verify_certificate(const Instance& inst, const Assignment& p,
                        const Certificate& cert) {
  validate_assignment(inst, p);
  const Assignment& q = improved_assignment(cert);
  validate_assignment(inst, q);
  return std::visit(
      Overloaded{
          [&](const DominatingAssignment&) {
            return pareto_dominates(utility_vector(inst, q), utility_vector(inst, p));
          },
          [&](const CycleCertificate& c) {
            const ImprovementGraph g = build_graph(inst, p);
            try {
              if (apply_cycle(p, g, c.cycle) != q) return false;
            } catch (const ValidationError&) {
              return false;
            }
            if (c.moves != cycle_moves(g, c.cycle)) return false;
            const UtilityTable lex = make_lex_utilities(inst);
            return pareto_dominates(utility_vector(lex, q), utility_vector(lex, p));
          },
          [&](const SwapCertificate& c) {
            try {
              validate_swap_witness(inst, p, c.witness);
            } catch (const ValidationError&) {
              return false;
            }
            if (!is_swap_witness_profile(inst, c.witness, c.witness_utilities)) {
              return false;
            }
            if (apply_swap(p, c.witness) != q) return false;
            return pareto_dominates(utility_vector(c.witness_utilities, q),
                                    utility_vector(c.witness_utilities, p));
          },
          [&](const FlowImprovement&) {
            return pareto_dominates(utility_vector(inst, q), utility_vector(inst, p));
          },
      },
      cert);
}

Certificate certificate_from_document(const Instance& inst, const Json& doc) {
  if (doc.is_object() && doc.contains("kind")) return certificate_from_json(inst, doc);
  const Verdict v = verdict_from_json(inst, doc);
  if (!v.certificate) throw ValidationError("verdict carries no certificate");
  return *v.certificate;
}

std::optional<Improvement> improve(const Instance& inst, const Assignment& p, Mode mode,
                                   bool to_optimal) {
  validate_assignment(inst, p);
  if (mode == Mode::kLex) {
    Improvement imp{p, 0};
    for (;;) {
      const PoResult r = test_po_lex(inst, imp.assignment);
      if (r.optimal) break;
      imp.assignment = improved_assignment(*r.certificate);
      ++imp.rounds;
      if (!to_optimal) break;
    }
    if (imp.rounds == 0 && !to_optimal) return std::nullopt;
    return imp;
  }
  if (mode == Mode::kBivalued) {
    const BivaluedView view = classify_bivalued(inst);
    if (to_optimal) {
      std::vector<Assignment> trace;
      Assignment q = optimize_bivalued(view, p, &trace);
      return Improvement{std::move(q), trace.size() - 1};
    }
    if (auto step = find_improvement_bivalued(view, p)) {
      return Improvement{std::move(step->assignment), 1};
    }
    return std::nullopt;
  }
  throw ValidationError("improvement is only available for lex and bivalued modes, not " +
                        std::string(to_string(mode)));
}

}  // namespace pareto
