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

#ifndef PARETO_RATIONAL_HPP_
#define PARETO_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pareto {

// Arbitrary-precision exact rational. Expression templates are disabled so
// that `auto x = a + b;` yields a value, not a lazy expression.
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Parses "p" or "p/q" with p, q decimal, q > 0 and an optional leading '-'
// on p. Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& value);

}  // namespace pareto

#endif  // PARETO_RATIONAL_HPP_
