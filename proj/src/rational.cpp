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

#include "pareto/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pareto/error.hpp"

namespace pareto {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return ValidationError("malformed rational '" + std::string(text) + "'");
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) throw bad();
  BigInt n(std::string{num});
  BigInt d(std::string{den});
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string format_rational(const Rational& value) { return value.str(); }

}  // namespace pareto
