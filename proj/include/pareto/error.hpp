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

#ifndef PARETO_ERROR_HPP_
#define PARETO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pareto {

// Base of every error raised on bad input or exhausted budgets.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed documents, broken partitions, inconsistent preferences, and
// preconditions that the caller could have checked.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size or work budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace pareto

#endif  // PARETO_ERROR_HPP_
