// Copyright 2026 The Parity Factor Kit Authors.
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

#ifndef PFK_ERRORS_H_
#define PFK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pfk {

// Caller passed arguments that violate an operation's precondition.
class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive enumeration would exceed its configured size cap. Never
// raised after partial work is returned; callers see either a full answer or
// this error.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line()` is 1-based, or 0 when the problem is not
// tied to a particular line (e.g. premature end of file).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A file could not be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pfk

#endif  // PFK_ERRORS_H_
