// Copyright 2026 The Authors.
//
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

#ifndef CMRANK_ERRORS_H_
#define CMRANK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cmrank {

// Caller passed arguments that do not fit together (mismatched graph,
// different spaces, malformed spec string).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's documented precondition does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unreadable or malformed input file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A local oracle broke its contract (asymmetric neighbors, degree overflow).
class OracleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cmrank

#endif  // CMRANK_ERRORS_H_
