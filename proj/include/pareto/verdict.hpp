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

#ifndef PARETO_VERDICT_HPP_
#define PARETO_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pareto/additive.hpp"
#include "pareto/certificate.hpp"
#include "pareto/io.hpp"
#include "pareto/model.hpp"

namespace pareto {

enum class Mode { kAdditive, kLex, kBivalued, kPossiblePo, kNecessaryPo };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct Verdict {
  Mode mode = Mode::kAdditive;
  bool optimal = true;
  std::optional<Certificate> certificate;
  std::vector<std::string> diagnostics;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct CheckOptions {
  std::size_t max_table = kDefaultMaxTableEntries;
};

// Runs the tester for `mode`. Throws ValidationError when the instance does
// not fit the mode (missing utilities, not bivalued, ...).
Verdict run_check(const Instance& inst, const Assignment& p, Mode mode,
                  const CheckOptions& options = {});

Json certificate_to_json(const Instance& inst, const Certificate& cert);
Certificate certificate_from_json(const Instance& inst, const Json& doc);

Json verdict_to_json(const Instance& inst, const Verdict& verdict);
Verdict verdict_from_json(const Instance& inst, const Json& doc);

// Re-checks a certificate from scratch: the improved assignment must
// Pareto-dominate `p` under the utilities the certificate appeals to (the
// instance's own for additive and flow certificates, lexicographic ones for
// cycles, the attached witness profile for swaps), and any structural claim
// (cycle edges, swap preferences) must hold for `p`.
bool verify_certificate(const Instance& inst, const Assignment& p,
                        const Certificate& cert);

// Accepts either a bare certificate or a verdict carrying one.
Certificate certificate_from_document(const Instance& inst, const Json& doc);

struct Improvement {
  Assignment assignment;
  std::size_t rounds = 0;
};

// One improving step (or, with `to_optimal`, steps until optimal) for the
// lex and bivalued modes. Empty when p admits no step and `to_optimal` is
// off; with `to_optimal` an optimal p comes back unchanged after 0 rounds.
std::optional<Improvement> improve(const Instance& inst, const Assignment& p, Mode mode,
                                   bool to_optimal);

}  // namespace pareto

#endif  // PARETO_VERDICT_HPP_
