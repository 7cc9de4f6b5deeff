// Copyright 2026 The revgate Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revgate {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed tables, width mismatches, inconsistent wiring.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Unknown gate or decomposition name.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Input and output line counts differ.
class ArityError : public Error {
 public:
  using Error::Error;
};

// Register or circuit wider than the exhaustive-enumeration cap.
class WidthError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A gate definition whose truth table is not a permutation. Carries two
// distinct inputs that map to the same output.
class BijectivityError : public Error {
 public:
  BijectivityError(const std::string& message, std::uint32_t first,
                   std::uint32_t second)
      : Error(message), first_(first), second_(second) {}

  std::uint32_t first() const { return first_; }
  std::uint32_t second() const { return second_; }

 private:
  std::uint32_t first_;
  std::uint32_t second_;
};

}  // namespace revgate
