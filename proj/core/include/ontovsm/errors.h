// Copyright 2026 The ontovsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOVSM_ERRORS_H_
#define ONTOVSM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontovsm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the 1-based line number of the offending
// line, or 0 when the problem is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A knowledge base whose class hierarchy contains a cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A reference (class parent, entity class, annotation slot) that does not
// resolve to a declared id.
class UnknownIdError : public Error {
 public:
  using Error::Error;
};

// The same id was declared twice (classes, entities, corpus documents).
class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that violates a semantic rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ontovsm

#endif  // ONTOVSM_ERRORS_H_
