// Copyright 2026 The Edgeouter Authors.
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

#ifndef EDGEOUTER_ERRORS_H_
#define EDGEOUTER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace edgeouter {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (bad endpoints, non-cubic graph
// handed to a cubic-only routine, a walk that is not closed, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed. `line()` is 1-based; 0 means "unknown".
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& message)
      : InvalidInput("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive search would examine more candidates than the caller allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace edgeouter

#endif  // EDGEOUTER_ERRORS_H_
