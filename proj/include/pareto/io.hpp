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

// JSON documents.
//
// Instance:
//   {
//     "agents": ["1", "2"],
//     "objects": ["o1", "o2"],
//     "preferences": {"1": [["o1"], ["o2"]], "2": [["o1", "o2"]]},
//     "utilities": {"1": {"o1": "2", "o2": "1/2"}, "2": {...}},
//     "endowment": {"1": ["o1"], "2": ["o2"]}
//   }
// `preferences` may be omitted when `utilities` is present and vice versa;
// `endowment` is optional. Utilities are strings "p" or "p/q".
//
// Assignment: {"agent": ["object", ...], ...}; agents left out get nothing.

#ifndef PARETO_IO_HPP_
#define PARETO_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "pareto/model.hpp"

namespace pareto {

using Json = nlohmann::ordered_json;

// Parses text into JSON, mapping syntax errors to ValidationError.
Json parse_json(std::string_view text);

Instance parse_instance(std::string_view text);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);

Assignment parse_assignment(const Instance& inst, std::string_view text);
Assignment assignment_from_json(const Instance& inst, const Json& doc);
Json assignment_to_json(const Instance& inst, const Assignment& p);
std::string serialize_assignment(const Instance& inst, const Assignment& p);

UtilityTable utilities_from_json(const Instance& inst, const Json& doc);
Json utilities_to_json(const Instance& inst, const UtilityTable& utilities);

}  // namespace pareto

#endif  // PARETO_IO_HPP_
