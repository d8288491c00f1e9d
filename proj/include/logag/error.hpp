// Copyright 2026 The logag Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logag {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed theory, rules, term or indexing text. Line and column are
// 1-based; zero means the position is unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        line_(line),
        column_(column),
        bare_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& bare_message() const { return bare_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string bare_;
};

// Well-formed input that violates a semantic precondition (undeclared
// domain, inconsistent monotonic part, non-bijective indexing, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A desk-scale limit (atoms, kernel base, argument depth, subsets, levels)
// was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace logag
