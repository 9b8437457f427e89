// Copyright 2026 The pb Authors
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

#ifndef PB_ERRORS_HPP
#define PB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pb {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed scenario text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A budget refers to items that do not exist in the scenario.
class MalformedBudgetError : public Error {
 public:
  using Error::Error;
};

// A solver was asked to run with a satisfaction function it does not support.
class UnsupportedPairingError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a configured resource cap (item count, limit magnitude, voter count).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Invalid axiom perturbation: bad split composition, mixed-approval merge,
// discounting an unbudgeted item, and similar precondition failures.
class InvalidPerturbationError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pb

#endif  // PB_ERRORS_HPP
