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

// Hardware complexity: counts of two-input XOR (alpha), two-input AND (beta)
// and NOT (delta) operations in a gate's output expressions.
//
// Counting rule: each output expression is counted on its own, with no
// subexpression shared between outputs. Inputs bound to constants are folded
// first (x^0 -> x, x^1 -> !x, x&0 -> 0, x&1 -> x), which is how the adder
// gates are counted in their D = 0 operating mode.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revgate/gate.hpp"
#include "revgate/qcost.hpp"

namespace revgate {

struct ComplexityVector {
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned delta = 0;

  unsigned total_ops() const { return alpha + beta + delta; }
  /// Formal sum, e.g. "5α+2β" or "6α+3β+3δ"; "0" when empty.
  std::string formula() const;

  friend bool operator==(const ComplexityVector&,
                         const ComplexityVector&) = default;
  ComplexityVector& operator+=(const ComplexityVector& o) {
    alpha += o.alpha;
    beta += o.beta;
    delta += o.delta;
    return *this;
  }
};

using ConstantBindings = std::map<std::string, bool>;

/// Folds bound inputs into constants and simplifies constant operands away.
BoolExpr fold_constants(const BoolExpr& expr, const ConstantBindings& bindings);

ComplexityVector count_ops(const BoolExpr& expr,
                           const ConstantBindings& bindings = {});

/// Per-output count. Empty for table-only gates ("not computable").
std::optional<ComplexityVector> count_ops(const GateDef& gate,
                                          const ConstantBindings& bindings = {});

struct ComplexityRow {
  std::string name;
  std::optional<ComplexityVector> ops;
  QuantumCost quantum_cost;
  /// Row carries published data rather than a computed count.
  bool reference = false;
  std::string note;
};

struct RowRequest {
  const GateDef* gate;
  ConstantBindings bindings;
};

ComplexityRow complexity_row(const GateDef& gate,
                             const ConstantBindings& bindings,
                             const CostRegistry& costs);

/// Published counts for full-adder gates whose definitions are not built in
/// (TSG, MKG). Throws LookupError for other names.
ComplexityRow reference_row(const std::string& name);

std::vector<ComplexityRow> complexity_report(
    const std::vector<RowRequest>& gates, const CostRegistry& costs);

/// The full-adder gate comparison: PFAG (counted with D = 0), HNG, and the
/// reference rows MKG and TSG. Gates supplied in `overrides` (e.g. a TSG
/// definition file) replace the corresponding reference row with a computed
/// one.
std::vector<ComplexityRow> adder_gate_comparison(
    const CostRegistry& costs, const std::vector<GateDef>& overrides = {});

/// CSV with header `name,alpha,beta,delta,T,quantum_cost`.
std::string to_csv(const std::vector<ComplexityRow>& rows);
/// Aligned plain-text table.
std::string to_table(const std::vector<ComplexityRow>& rows);

}  // namespace revgate
