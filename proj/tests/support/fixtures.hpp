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

#ifndef PARETO_TESTS_FIXTURES_HPP_
#define PARETO_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "generators.hpp"
#include "pareto/io.hpp"
#include "pareto/model.hpp"

namespace pareto::fixture {

inline std::string data_path(const std::string& file) {
  return std::string(PARETO_TEST_DATA_DIR) + "/" + file;
}

// Loads tests/data/<name>.json.
inline Instance load(const std::string& name) {
  return parse_instance(gen::read_text(data_path(name + ".json")));
}

// Bundles by object name, e.g. assign(inst, {{"o2", "o4"}, {"o1"}, {"o3", "o5"}}).
inline Assignment assign(const Instance& inst,
                         const std::vector<std::vector<std::string>>& bundles) {
  std::vector<Bundle> idx;
  for (const auto& b : bundles) {
    idx.emplace_back();
    for (const auto& name : b) idx.back().push_back(*inst.find_object(name));
  }
  return Assignment::from_bundles(inst.num_objects(), idx);
}

inline Bundle objects(const Instance& inst, const std::vector<std::string>& names) {
  Bundle b;
  for (const auto& name : names) b.push_back(*inst.find_object(name));
  return b;
}

inline std::vector<Rational> ints(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace pareto::fixture

#endif  // PARETO_TESTS_FIXTURES_HPP_
