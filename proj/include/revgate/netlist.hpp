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

// Circuits over named lines: gate instances applied in order, each one
// rebinding the lines it touches. Lines bound at the input side are constant
// inputs; every terminal line is either a useful output or garbage.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revgate/bitcore.hpp"
#include "revgate/gate.hpp"
#include "revgate/qcost.hpp"

namespace revgate {

struct GateInstance {
  std::shared_ptr<const GateDef> gate;
  /// Physical line index feeding port k (and receiving output k).
  std::vector<unsigned> positions;
  std::vector<std::string> input_names;
  std::vector<std::string> output_names;
};

class Circuit {
 public:
  /// Incremental construction with the same validation as the parser.
  class Builder {
   public:
    explicit Builder(std::vector<std::string> lines);

    Builder& constant(std::string_view line, bool value);
    /// Connects current line names `inputs` to `gate`; the touched lines are
    /// renamed to `outputs`. An output may keep its port's input name.
    Builder& gate(const GateDef& gate, const std::vector<std::string>& inputs,
                  const std::vector<std::string>& outputs);
    Builder& garbage(std::string_view name);
    Builder& output(std::string_view name);

    /// Current name of physical line `position`.
    const std::string& current(unsigned position) const {
      return current_[position];
    }

    /// Validates that every terminal line is classified exactly once.
    Circuit build() const;

   private:
    unsigned position_of_current(std::string_view name) const;

    std::vector<std::string> lines_;
    std::map<unsigned, bool> constants_;
    std::vector<GateInstance> gates_;
    std::vector<std::string> current_;
    std::vector<std::string> used_names_;
    std::vector<std::string> garbage_;
    std::vector<std::string> outputs_;
  };

  unsigned width() const { return static_cast<unsigned>(lines_.size()); }
  const std::vector<std::string>& lines() const { return lines_; }
  const std::map<unsigned, bool>& constants() const { return constants_; }
  const std::vector<GateInstance>& gates() const { return gates_; }
  /// Name of each physical line after the last gate.
  const std::vector<std::string>& terminals() const { return terminals_; }
  const std::vector<std::string>& garbage() const { return garbage_; }
  const std::vector<std::string>& outputs() const { return outputs_; }

  /// Non-constant input lines, in declaration order.
  std::vector<std::string> free_inputs() const;
  unsigned terminal_position(std::string_view name) const;
  unsigned line_position(std::string_view name) const;

  /// Full-width evaluation with constants unbound (caller supplies every
  /// line). Throws WidthError above 32 lines.
  std::uint32_t evaluate(std::uint32_t full_input) const;
  /// Same, one value per line (line 0 first); any width.
  std::vector<bool> evaluate_lines(std::vector<bool> lines) const;

  /// Packs an assignment of the free inputs (first free line = MSB) together
  /// with the constant bindings into a full-width input word.
  std::uint32_t embed(std::uint32_t free_assignment) const;
  /// Same, one value per line; any width.
  std::vector<bool> embed_lines(std::uint32_t free_assignment) const;

  /// Serializes to the netlist format.
  std::string to_netlist() const;

 private:
  friend class Builder;
  Circuit() = default;

  std::vector<std::string> lines_;
  std::map<unsigned, bool> constants_;
  std::vector<GateInstance> gates_;
  std::vector<std::string> terminals_;
  std::vector<std::string> garbage_;
  std::vector<std::string> outputs_;
};

/// Parses the netlist format. Gate names resolve against `library`.
Circuit parse_netlist(std::string_view text,
                      const GateLibrary& library = GateLibrary());

/// Terminal line values after applying the gates with constants injected.
/// `assignment` must name exactly the free input lines.
std::map<std::string, bool> simulate(
    const Circuit& circuit, const std::map<std::string, bool>& assignment);

/// Same, with the free inputs packed into one word (first free line = MSB).
/// Returns the full-width terminal word.
BitVector simulate(const Circuit& circuit, std::uint32_t free_assignment);

/// Same, one terminal value per line; works above kMaxWidth.
std::vector<bool> simulate_lines(const Circuit& circuit,
                                 std::uint32_t free_assignment);

struct CircuitTables {
  /// Every line treated as free; always a permutation.
  TruthPermutation full;
  /// Indexed by free-input assignment; entry = full-width terminal word.
  std::vector<std::uint32_t> restricted;
};

/// Throws WidthError above kMaxWidth lines.
CircuitTables circuit_permutation(const Circuit& circuit);

struct AuditReport {
  unsigned width = 0;
  unsigned gate_count = 0;
  unsigned constant_inputs = 0;
  unsigned garbage_outputs = 0;
  QuantumCost quantum_cost;
  bool reversible = false;
  std::vector<std::string> warnings;
};

AuditReport audit(const Circuit& circuit,
                  const CostRegistry& costs = CostRegistry());

}  // namespace revgate
