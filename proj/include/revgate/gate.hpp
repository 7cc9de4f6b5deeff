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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revgate/bitcore.hpp"
#include "revgate/expr.hpp"

namespace revgate {

struct GateOutput {
  std::string name;
  BoolExpr expr;
};

/// A named reversible gate. Construction validates equal input/output line
/// counts and bijectivity of the induced truth table.
class GateDef {
 public:
  GateDef(std::string name, std::vector<std::string> inputs,
          std::vector<GateOutput> outputs);

  /// Gate known only by its truth table (no expressions, so no operation
  /// counts).
  static GateDef from_table(std::string name, std::vector<std::string> inputs,
                            std::vector<std::string> output_names,
                            TruthPermutation table);

  const std::string& name() const { return name_; }
  unsigned width() const { return table_.width(); }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& output_names() const {
    return output_names_;
  }
  bool has_expressions() const { return exprs_.has_value(); }
  /// Throws StructuralError for table-only gates.
  const std::vector<BoolExpr>& expressions() const;
  const TruthPermutation& table() const { return table_; }

  std::uint32_t apply(std::uint32_t input) const { return table_(input); }
  BitVector apply(const BitVector& input) const;

  /// Gate-file text that parses back to an equal gate.
  std::string to_gate_file() const;

 private:
  GateDef(std::string name, std::vector<std::string> inputs,
          std::vector<std::string> output_names,
          std::optional<std::vector<BoolExpr>> exprs, TruthPermutation table);

  std::string name_;
  std::vector<std::string> inputs_;
  std::vector<std::string> output_names_;
  std::optional<std::vector<BoolExpr>> exprs_;
  TruthPermutation table_;
};

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();

/// FEYNMAN, TOFFOLI, FREDKIN, PERES, PFAG or HNG. Throws LookupError.
const GateDef& builtin(std::string_view name);

/// Where a port of a cascaded gate takes its value from.
struct Tap {
  enum class From { Line, First, Second };
  From from;
  unsigned index;

  static Tap line(unsigned i) { return {From::Line, i}; }
  static Tap first(unsigned i) { return {From::First, i}; }
  static Tap second(unsigned i) { return {From::Second, i}; }
};

/// Wiring of two gates into one compound gate over `lines`.
struct Wiring {
  std::vector<std::string> lines;
  /// Port k of the first gate reads lines[first_inputs[k]].
  std::vector<unsigned> first_inputs;
  /// Port k of the second gate reads a first-gate output or a line the first
  /// gate does not consume.
  std::vector<Tap> second_inputs;
};

/// Compound gate: `first`, then `second`, exporting `exports` (one per line)
/// as its outputs. Every first-gate output, second-gate output and untouched
/// line must be consumed or exported exactly once.
GateDef cascade(const GateDef& first, const GateDef& second,
                const Wiring& wiring, const std::vector<Tap>& exports,
                std::string name, std::vector<std::string> output_names);

/// The two-Peres construction of the 4-line full-adder gate: PERES on
/// (A, B, D), then PERES on (A^B, C, AB^D).
GateDef pfag_from_peres_cascade();

/// Parses the line-oriented gate-definition format.
GateDef parse_gate_file(std::string_view text);

/// Built-in gates plus gates loaded from files, looked up by name.
class GateLibrary {
 public:
  GateLibrary();

  void add(GateDef gate);
  bool contains(std::string_view name) const;
  /// Throws LookupError.
  const GateDef& get(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, GateDef, std::less<>> gates_;
};

}  // namespace revgate
