// Copyright 2026 The dbfold Authors
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

#ifndef DBFOLD_ERROR_HPP_
#define DBFOLD_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dbfold {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates an operation's precondition (wrong alphabet, not
// strongly synchronizing, not invertible, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured search or size cap was exceeded. Distinct from a negative
// answer: the question was not decided.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Text input that is not syntactically well formed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input whose values are out of range or inconsistent.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Indicates a bug, or input outside
// the hypotheses of a construction; never silently patched.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dbfold

#endif  // DBFOLD_ERROR_HPP_
