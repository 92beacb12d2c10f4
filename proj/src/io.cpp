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

#include "pareto/io.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pareto/error.hpp"

namespace pareto {
namespace {

class Names {
 public:
  Names(const std::vector<std::string>& names, const char* kind) : kind_(kind) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }

  std::size_t at(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) {
      throw ValidationError(std::string("unknown ") + kind_ + " '" + name + "'");
    }
    return it->second;
  }

 private:
  const char* kind_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& item : v) out.push_back(as_string(item, what));
  return out;
}

UtilityTable utilities_by_name(const std::vector<std::string>& agents,
                               const std::vector<std::string>& objects,
                               const Json& doc) {
  if (!doc.is_object()) throw ValidationError("'utilities' must be an object");
  const Names agent_names(agents, "agent");
  const Names object_names(objects, "object");
  UtilityTable table(agents.size());
  std::vector<char> seen_agent(agents.size(), 0);
  for (const auto& [agent, row] : doc.items()) {
    const std::size_t i = agent_names.at(agent);
    seen_agent[i] = 1;
    if (!row.is_object()) {
      throw ValidationError("utilities of agent '" + agent + "' must be an object");
    }
    std::vector<std::optional<Rational>> values(objects.size());
    for (const auto& [object, value] : row.items()) {
      values[object_names.at(object)] = parse_rational(as_string(value, "utility"));
    }
    for (std::size_t o = 0; o < objects.size(); ++o) {
      if (!values[o]) {
        throw ValidationError("agent '" + agent + "' has no utility for object '" +
                              objects[o] + "'");
      }
      table[i].push_back(*values[o]);
    }
  }
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (!seen_agent[i]) {
      throw ValidationError("agent '" + agents[i] + "' has no utilities");
    }
  }
  return table;
}

Assignment assignment_by_name(const std::vector<std::string>& agents,
                              const std::vector<std::string>& objects,
                              const Json& doc) {
  if (!doc.is_object()) throw ValidationError("assignment must be an object");
  const Names agent_names(agents, "agent");
  const Names object_names(objects, "object");
  constexpr AgentIndex kUnset = static_cast<AgentIndex>(-1);
  std::vector<AgentIndex> owners(objects.size(), kUnset);
  for (const auto& [agent, bundle] : doc.items()) {
    const std::size_t i = agent_names.at(agent);
    for (const std::string& object : string_list(bundle, "bundle")) {
      const std::size_t o = object_names.at(object);
      if (owners[o] != kUnset) {
        throw ValidationError("object duplicated: '" + object + "'");
      }
      owners[o] = i;
    }
  }
  for (std::size_t o = 0; o < objects.size(); ++o) {
    if (owners[o] == kUnset) {
      throw ValidationError("object missing: '" + objects[o] + "'");
    }
  }
  return Assignment(agents.size(), std::move(owners));
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}

Instance parse_instance(std::string_view text) {
  return instance_from_json(parse_json(text));
}

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
  std::vector<std::string> agents = string_list(require(doc, "agents"), "agents");
  std::vector<std::string> objects =
      string_list(require(doc, "objects"), "objects");
  for (const auto* names : {&agents, &objects}) {
    std::map<std::string_view, int> count;
    for (const auto& name : *names) {
      if (++count[name] > 1) {
        throw ValidationError("duplicate identifier '" + name + "'");
      }
    }
  }

  std::optional<std::vector<Tiers>> preferences;
  if (doc.contains("preferences")) {
    const Json& prefs = doc.at("preferences");
    if (!prefs.is_object()) {
      throw ValidationError("'preferences' must be an object");
    }
    const Names agent_names(agents, "agent");
    const Names object_names(objects, "object");
    std::vector<std::optional<Tiers>> by_agent(agents.size());
    for (const auto& [agent, tiers] : prefs.items()) {
      if (!tiers.is_array()) {
        throw ValidationError("tiers of agent '" + agent + "' must be an array");
      }
      Tiers parsed;
      for (const Json& tier : tiers) {
        parsed.emplace_back();
        for (const std::string& object : string_list(tier, "tier")) {
          parsed.back().push_back(object_names.at(object));
        }
      }
      by_agent[agent_names.at(agent)] = std::move(parsed);
    }
    preferences.emplace();
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (!by_agent[i]) {
        throw ValidationError("agent '" + agents[i] + "' has no preferences");
      }
      preferences->push_back(std::move(*by_agent[i]));
    }
  }

  std::optional<UtilityTable> utilities;
  if (doc.contains("utilities")) {
    utilities = utilities_by_name(agents, objects, doc.at("utilities"));
  }

  std::optional<Assignment> endowment;
  if (doc.contains("endowment")) {
    endowment = assignment_by_name(agents, objects, doc.at("endowment"));
  }

  return Instance::create(std::move(agents), std::move(objects),
                          std::move(preferences), std::move(utilities),
                          std::move(endowment));
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["agents"] = inst.agents();
  doc["objects"] = inst.objects();
  Json prefs = Json::object();
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    Json tiers = Json::array();
    for (const auto& tier : inst.tiers(i)) {
      Json names = Json::array();
      for (ObjectIndex o : tier) names.push_back(inst.object_name(o));
      tiers.push_back(std::move(names));
    }
    prefs[inst.agent_name(i)] = std::move(tiers);
  }
  doc["preferences"] = std::move(prefs);
  if (inst.has_utilities()) {
    doc["utilities"] = utilities_to_json(inst, inst.utilities());
  }
  if (inst.endowment()) {
    doc["endowment"] = assignment_to_json(inst, *inst.endowment());
  }
  return doc;
}

std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2);
}

Assignment parse_assignment(const Instance& inst, std::string_view text) {
  return assignment_from_json(inst, parse_json(text));
}

Assignment assignment_from_json(const Instance& inst, const Json& doc) {
  return assignment_by_name(inst.agents(), inst.objects(), doc);
}

Json assignment_to_json(const Instance& inst, const Assignment& p) {
  validate_assignment(inst, p);
  Json doc = Json::object();
  const std::vector<Bundle> bundles = p.bundles();
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    Json names = Json::array();
    for (ObjectIndex o : bundles[i]) names.push_back(inst.object_name(o));
    doc[inst.agent_name(i)] = std::move(names);
  }
  return doc;
}

std::string serialize_assignment(const Instance& inst, const Assignment& p) {
  return assignment_to_json(inst, p).dump(2);
}

UtilityTable utilities_from_json(const Instance& inst, const Json& doc) {
  return utilities_by_name(inst.agents(), inst.objects(), doc);
}

Json utilities_to_json(const Instance& inst, const UtilityTable& utilities) {
  Json doc = Json::object();
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    Json row = Json::object();
    for (ObjectIndex o = 0; o < inst.num_objects(); ++o) {
      row[inst.object_name(o)] = format_rational(utilities.at(i).at(o));
    }
    doc[inst.agent_name(i)] = std::move(row);
  }
  return doc;
}

}  // namespace pareto
