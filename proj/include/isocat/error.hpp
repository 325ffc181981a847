// Copyright 2026 The isocat Authors
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

namespace isocat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cayley data that fails a group axiom. The message names the first
// violating element(s).
class NotAGroup : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : ParseError(std::string(), what, line, column) {}
  // `path` prefixes the message when the text came from a file.
  ParseError(const std::string& path, const std::string& what, int line, int column)
      : Error((path.empty() ? std::string() : path + ": ") + "line " + std::to_string(line) +
              ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column),
        detail_(what) {}
  int line() const { return line_; }
  int column() const { return column_; }
  // The message without path and position.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

class UnknownGenerator : public ParseError {
 public:
  using ParseError::ParseError;
};

// Coset enumeration hit its coset bound before closing.
class Overflow : public Error {
 public:
  explicit Overflow(std::size_t max_cosets)
      : Error("coset enumeration exceeded " + std::to_string(max_cosets) +
              " cosets"),
        max_cosets_(max_cosets) {}

  std::size_t max_cosets() const { return max_cosets_; }

 private:
  std::size_t max_cosets_;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class OddNumerator : public Error {
 public:
  using Error::Error;
};

class NoSuchElement : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class PartnerNotFound : public Error {
 public:
  using Error::Error;
};

// A pipeline self-check failed (order list not preserved, closed form and
// ratio method disagree, ...). Always a bug or a corrupt input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace isocat
