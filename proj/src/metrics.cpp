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

#include "revgate/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "revgate/error.hpp"

namespace revgate {

std::string ComplexityVector::formula() const {
  std::string s;
  auto term = [&s](unsigned n, const char* sym) {
    if (n == 0) return;
    if (!s.empty()) s += '+';
    if (n != 1) s += std::to_string(n);
    s += sym;
  };
  term(alpha, "α");
  term(beta, "β");
  term(delta, "δ");
  return s.empty() ? "0" : s;
}

BoolExpr fold_constants(const BoolExpr& expr,
                        const ConstantBindings& bindings) {
  using K = BoolExpr::Kind;
  switch (expr.kind()) {
    case K::Var: {
      auto it = bindings.find(expr.name());
      return it == bindings.end() ? expr : BoolExpr::constant(it->second);
    }
    case K::Const:
      return expr;
    case K::Not: {
      BoolExpr c = fold_constants(expr.child(), bindings);
      if (c.kind() == K::Const) return BoolExpr::constant(!c.value());
      return !c;
    }
    case K::And: {
      BoolExpr l = fold_constants(expr.left(), bindings);
      BoolExpr r = fold_constants(expr.right(), bindings);
      if (l.kind() == K::Const) return l.value() ? r : l;
      if (r.kind() == K::Const) return r.value() ? l : r;
      return l & r;
    }
    case K::Xor: {
      BoolExpr l = fold_constants(expr.left(), bindings);
      BoolExpr r = fold_constants(expr.right(), bindings);
      if (l.kind() == K::Const && r.kind() == K::Const) {
        return BoolExpr::constant(l.value() != r.value());
      }
      if (l.kind() == K::Const) return l.value() ? !r : r;
      if (r.kind() == K::Const) return r.value() ? !l : l;
      return l ^ r;
    }
  }
  return expr;
}

namespace {

void count_into(const BoolExpr& e, ComplexityVector& v) {
  switch (e.kind()) {
    case BoolExpr::Kind::Var:
    case BoolExpr::Kind::Const:
      return;
    case BoolExpr::Kind::Not:
      ++v.delta;
      count_into(e.child(), v);
      return;
    case BoolExpr::Kind::And:
      ++v.beta;
      count_into(e.left(), v);
      count_into(e.right(), v);
      return;
    case BoolExpr::Kind::Xor:
      ++v.alpha;
      count_into(e.left(), v);
      count_into(e.right(), v);
      return;
  }
}

}  // namespace

ComplexityVector count_ops(const BoolExpr& expr,
                           const ConstantBindings& bindings) {
  ComplexityVector v;
  count_into(bindings.empty() ? expr : fold_constants(expr, bindings), v);
  return v;
}

std::optional<ComplexityVector> count_ops(const GateDef& gate,
                                          const ConstantBindings& bindings) {
  if (!gate.has_expressions()) return std::nullopt;
  for (const auto& [name, value] : bindings) {
    if (std::find(gate.inputs().begin(), gate.inputs().end(), name) ==
        gate.inputs().end()) {
      throw StructuralError("gate " + gate.name() + " has no input '" + name +
                            "'");
    }
  }
  ComplexityVector total;
  for (const auto& e : gate.expressions()) total += count_ops(e, bindings);
  return total;
}

namespace {

std::string bindings_note(const ConstantBindings& bindings) {
  std::string s;
  for (const auto& [name, value] : bindings) {
    if (!s.empty()) s += ", ";
    s += name + "=" + (value ? "1" : "0");
  }
  return s;
}

}  // namespace

ComplexityRow complexity_row(const GateDef& gate,
                             const ConstantBindings& bindings,
                             const CostRegistry& costs) {
  ComplexityRow row;
  row.name = gate.name();
  row.ops = count_ops(gate, bindings);
  row.quantum_cost = costs.cost_of(gate.name());
  if (!row.ops) {
    row.note = "not computable (table-only definition)";
  } else if (!bindings.empty()) {
    row.note = "counted with " + bindings_note(bindings);
  }
  return row;
}

ComplexityRow reference_row(const std::string& name) {
  ComplexityRow row;
  row.name = name;
  row.reference = true;
  row.note = "reference values (no definition supplied)";
  if (name == "TSG") {
    row.ops = ComplexityVector{6, 3, 3};
  } else if (name == "MKG") {
    row.ops = ComplexityVector{5, 3, 3};
  } else {
    throw LookupError("no reference row for '" + name + "'");
  }
  return row;
}

std::vector<ComplexityRow> complexity_report(
    const std::vector<RowRequest>& gates, const CostRegistry& costs) {
  std::vector<ComplexityRow> rows;
  for (const auto& g : gates) {
    rows.push_back(complexity_row(*g.gate, g.bindings, costs));
  }
  return rows;
}

std::vector<ComplexityRow> adder_gate_comparison(
    const CostRegistry& costs, const std::vector<GateDef>& overrides) {
  auto supplied = [&overrides](const std::string& name) -> const GateDef* {
    for (const auto& g : overrides) {
      if (g.name() == name) return &g;
    }
    return nullptr;
  };
  std::vector<ComplexityRow> rows;
  // PFAG is counted in its full-adder mode (fourth input at 0).
  rows.push_back(complexity_row(builtin("PFAG"), {{"D", false}}, costs));
  rows.push_back(complexity_row(builtin("HNG"), {}, costs));
  for (const std::string name : {"MKG", "TSG"}) {
    if (const GateDef* g = supplied(name)) {
      rows.push_back(complexity_row(*g, {}, costs));
      rows.back().note = "computed from supplied definition";
    } else {
      rows.push_back(reference_row(name));
      rows.back().quantum_cost = costs.cost_of(name);
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ComplexityRow>& rows) {
  std::ostringstream os;
  os << "name,alpha,beta,delta,T,quantum_cost\n";
  for (const auto& r : rows) {
    os << r.name << ',';
    if (r.ops) {
      os << r.ops->alpha << ',' << r.ops->beta << ',' << r.ops->delta << ','
         << r.ops->formula();
    } else {
      os << ",,,";
    }
    os << ',' << r.quantum_cost.to_string() << '\n';
  }
  return os.str();
}

namespace {

// Display width of a UTF-8 string (Greek letters are two bytes).
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace

std::string to_table(const std::vector<ComplexityRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"Gate", "alpha", "beta", "delta", "T", "Quantum cost",
                   "Note"});
  for (const auto& r : rows) {
    if (r.ops) {
      cells.push_back({r.name, std::to_string(r.ops->alpha),
                       std::to_string(r.ops->beta),
                       std::to_string(r.ops->delta), r.ops->formula(),
                       r.quantum_cost.to_string(), r.note});
    } else {
      cells.push_back({r.name, "-", "-", "-", "-", r.quantum_cost.to_string(),
                       r.note});
    }
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], display_width(row[i]));
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace revgate
