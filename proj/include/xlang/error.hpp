// Copyright 2026 The xlang Authors
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

#ifndef XLANG_ERROR_HPP
#define XLANG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xlang {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; line is 0 when the
/// input was a single formula rather than a document.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string expected = {})
      : Error(format(message, line, column, expected)),
        detail_(message),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column,
                            const std::string& expected) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ", ";
    out += "column " + std::to_string(column) + ": " + message;
    if (!expected.empty()) out += " (expected " + expected + ")";
    return out;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

class UndeclaredAtomError : public ParseError {
 public:
  UndeclaredAtomError(const std::string& atom, std::size_t line, std::size_t column)
      : ParseError("undeclared atom '" + atom + "'", line, column), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

class DuplicateAtomError : public ParseError {
 public:
  DuplicateAtomError(const std::string& atom, std::size_t line, std::size_t column)
      : ParseError("duplicate atom declaration '" + atom + "'", line, column), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

/// The belief set admits no model.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table would exceed a configured size limit.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebras.
class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};

/// ★ has no negation.
class StarNegationError : public Error {
 public:
  StarNegationError() : Error("the star element has no negation") {}
};

/// A conversion was asked to work on input that fails its axioms.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Characterizations that must coincide on consistent input did not.
class CharacterizationMismatchError : public Error {
 public:
  using Error::Error;
};

class DegenerateCommonLanguageError : public Error {
 public:
  using Error::Error;
};

/// An input file could not be read.
class FileError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace xlang

#endif  // XLANG_ERROR_HPP
