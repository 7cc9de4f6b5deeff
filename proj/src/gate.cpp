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

#include "revgate/gate.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "revgate/error.hpp"
#include "text_util.hpp"

namespace revgate {

namespace {

void check_unique(const std::vector<std::string>& names,
                  const std::string& what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw StructuralError("duplicate " + what + " '" + n + "'");
    }
  }
}

TruthPermutation build_table(const std::string& gate_name, unsigned width,
                             const std::vector<CompiledExpr>& compiled) {
  const std::uint32_t rows = std::uint32_t{1} << width;
  std::vector<std::uint32_t> map(rows);
  for (std::uint32_t in = 0; in < rows; ++in) {
    std::uint32_t out = 0;
    for (const auto& c : compiled) out = (out << 1) | (c.eval(in) ? 1u : 0u);
    map[in] = out;
  }
  if (auto c = find_collision(map)) {
    const std::string a = BitVector(width, c->first).to_string();
    const std::string b = BitVector(width, c->second).to_string();
    throw BijectivityError("gate " + gate_name +
                               " is not reversible: inputs " + a + " and " +
                               b + " both produce " +
                               BitVector(width, map[c->first]).to_string(),
                           c->first, c->second);
  }
  return TruthPermutation(width, std::move(map));
}

}  // namespace

GateDef::GateDef(std::string name, std::vector<std::string> inputs,
                 std::vector<std::string> output_names,
                 std::optional<std::vector<BoolExpr>> exprs,
                 TruthPermutation table)
    : name_(std::move(name)),
      inputs_(std::move(inputs)),
      output_names_(std::move(output_names)),
      exprs_(std::move(exprs)),
      table_(std::move(table)) {}

GateDef::GateDef(std::string name, std::vector<std::string> inputs,
                 std::vector<GateOutput> outputs)
    : GateDef(std::move(name), std::move(inputs), {}, std::nullopt,
              TruthPermutation::identity(1)) {
  if (inputs_.size() != outputs.size()) {
    throw ArityError("gate " + name_ + " has " +
                     std::to_string(inputs_.size()) + " inputs but " +
                     std::to_string(outputs.size()) +
                     " outputs; reversible gates need equal line counts");
  }
  check_width(static_cast<unsigned>(inputs_.size()));
  check_unique(inputs_, "input line");
  std::vector<BoolExpr> exprs;
  std::vector<CompiledExpr> compiled;
  for (auto& out : outputs) {
    output_names_.push_back(out.name);
    compiled.emplace_back(out.expr, inputs_);
    exprs.push_back(std::move(out.expr));
  }
  check_unique(output_names_, "output line");
  table_ = build_table(name_, static_cast<unsigned>(inputs_.size()), compiled);
  exprs_ = std::move(exprs);
}

GateDef GateDef::from_table(std::string name, std::vector<std::string> inputs,
                            std::vector<std::string> output_names,
                            TruthPermutation table) {
  if (inputs.size() != output_names.size() || inputs.size() != table.width()) {
    throw ArityError("gate " + name + ": line counts disagree with table width");
  }
  check_unique(inputs, "input line");
  check_unique(output_names, "output line");
  return GateDef(std::move(name), std::move(inputs), std::move(output_names),
                 std::nullopt, std::move(table));
}

const std::vector<BoolExpr>& GateDef::expressions() const {
  if (!exprs_) {
    throw StructuralError("gate " + name_ + " is defined by a table only");
  }
  return *exprs_;
}

BitVector GateDef::apply(const BitVector& input) const {
  if (input.width() != width()) {
    throw StructuralError("gate " + name_ + " expects " +
                          std::to_string(width()) + " lines");
  }
  return BitVector(width(), table_(input.value()));
}

std::string GateDef::to_gate_file() const {
  const auto& exprs = expressions();
  std::ostringstream os;
  os << "gate " << name_ << ' ' << width() << "\nin ";
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    os << (i ? " " : "") << inputs_[i];
  }
  os << '\n';
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    os << "out " << output_names_[i] << " = " << exprs[i].to_string() << '\n';
  }
  return os.str();
}

namespace {

std::map<std::string, GateDef, std::less<>> make_builtins() {
  const auto A = BoolExpr::var("A");
  const auto B = BoolExpr::var("B");
  const auto C = BoolExpr::var("C");
  const auto D = BoolExpr::var("D");
  std::map<std::string, GateDef, std::less<>> m;
  auto add = [&m](GateDef g) {
    std::string key = g.name();
    m.emplace(std::move(key), std::move(g));
  };
  add(GateDef("FEYNMAN", {"A", "B"}, {{"P", A}, {"Q", A ^ B}}));
  add(GateDef("TOFFOLI", {"A", "B", "C"},
              {{"P", A}, {"Q", B}, {"R", (A & B) ^ C}}));
  add(GateDef("FREDKIN", {"A", "B", "C"},
              {{"P", A},
               {"Q", ((!A) & B) ^ (A & C)},
               {"R", ((!A) & C) ^ (A & B)}}));
  add(GateDef("PERES", {"A", "B", "C"},
              {{"P", A}, {"Q", A ^ B}, {"R", (A & B) ^ C}}));
  add(GateDef("PFAG", {"A", "B", "C", "D"},
              {{"P", A},
               {"Q", A ^ B},
               {"R", A ^ B ^ C},
               {"S", ((A ^ B) & C) ^ (A & B) ^ D}}));
  add(GateDef("HNG", {"A", "B", "C", "D"},
              {{"P", A},
               {"Q", B},
               {"R", A ^ B ^ C},
               {"S", ((A ^ B) & C) ^ (A & B) ^ D}}));
  return m;
}

const std::map<std::string, GateDef, std::less<>>& builtins() {
  static const auto m = make_builtins();
  return m;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "FEYNMAN", "TOFFOLI", "FREDKIN", "PERES", "PFAG", "HNG"};
  return names;
}

const GateDef& builtin(std::string_view name) {
  auto it = builtins().find(name);
  if (it == builtins().end()) {
    throw LookupError("unknown built-in gate '" + std::string(name) + "'");
  }
  return it->second;
}

GateDef cascade(const GateDef& first, const GateDef& second,
                const Wiring& wiring, const std::vector<Tap>& exports,
                std::string name, std::vector<std::string> output_names) {
  const auto& lines = wiring.lines;
  const std::size_t n = lines.size();
  if (wiring.first_inputs.size() != first.width()) {
    throw StructuralError("first gate " + first.name() + " needs " +
                          std::to_string(first.width()) + " inputs");
  }
  if (wiring.second_inputs.size() != second.width()) {
    throw StructuralError("second gate " + second.name() + " needs " +
                          std::to_string(second.width()) + " inputs");
  }
  if (exports.size() != n || output_names.size() != n) {
    throw StructuralError("cascade over " + std::to_string(n) +
                          " lines must export exactly " + std::to_string(n) +
                          " outputs");
  }

  // Each line, first output and second output is used exactly once.
  std::vector<int> line_uses(n, 0);
  std::vector<int> first_uses(first.width(), 0);
  std::vector<int> second_uses(second.width(), 0);
  auto use = [](std::vector<int>& uses, unsigned i, const char* what) {
    if (i >= uses.size()) {
      throw StructuralError(std::string(what) + " index " +
                            std::to_string(i) + " out of range");
    }
    ++uses[i];
  };
  for (unsigned i : wiring.first_inputs) use(line_uses, i, "line");
  for (const Tap& t : wiring.second_inputs) {
    if (t.from == Tap::From::Second) {
      throw StructuralError("second gate cannot feed itself");
    }
    if (t.from == Tap::From::Line) {
      use(line_uses, t.index, "line");
    } else {
      use(first_uses, t.index, "first output");
    }
  }
  for (const Tap& t : exports) {
    switch (t.from) {
      case Tap::From::Line:
        use(line_uses, t.index, "line");
        break;
      case Tap::From::First:
        use(first_uses, t.index, "first output");
        break;
      case Tap::From::Second:
        use(second_uses, t.index, "second output");
        break;
    }
  }
  auto all_once = [](const std::vector<int>& u) {
    return std::all_of(u.begin(), u.end(), [](int c) { return c == 1; });
  };
  if (!all_once(line_uses)) {
    throw StructuralError("every line must feed exactly one gate port or "
                          "export");
  }
  if (!all_once(first_uses)) {
    throw StructuralError("every output of " + first.name() +
                          " must be consumed or exported exactly once");
  }
  if (!all_once(second_uses)) {
    throw StructuralError("every output of " + second.name() +
                          " must be exported exactly once");
  }

  std::map<std::string, BoolExpr> first_bind;
  for (unsigned k = 0; k < first.width(); ++k) {
    first_bind.emplace(first.inputs()[k],
                       BoolExpr::var(lines[wiring.first_inputs[k]]));
  }
  std::vector<BoolExpr> first_out;
  for (const auto& e : first.expressions()) {
    first_out.push_back(e.substitute(first_bind));
  }
  std::map<std::string, BoolExpr> second_bind;
  for (unsigned k = 0; k < second.width(); ++k) {
    const Tap& t = wiring.second_inputs[k];
    second_bind.emplace(second.inputs()[k],
                        t.from == Tap::From::Line
                            ? BoolExpr::var(lines[t.index])
                            : first_out[t.index]);
  }
  std::vector<BoolExpr> second_out;
  for (const auto& e : second.expressions()) {
    second_out.push_back(e.substitute(second_bind));
  }

  std::vector<GateOutput> outputs;
  for (std::size_t i = 0; i < n; ++i) {
    const Tap& t = exports[i];
    const BoolExpr& e = t.from == Tap::From::Line  ? BoolExpr::var(lines[t.index])
                        : t.from == Tap::From::First ? first_out[t.index]
                                                     : second_out[t.index];
    outputs.push_back({output_names[i], e});
  }
  // Bijectivity follows from the exactly-once checks; GateDef re-verifies it.
  return GateDef(std::move(name), lines, std::move(outputs));
}

GateDef pfag_from_peres_cascade() {
  const GateDef& peres = builtin("PERES");
  Wiring w;
  w.lines = {"A", "B", "C", "D"};
  w.first_inputs = {0, 1, 3};
  w.second_inputs = {Tap::first(1), Tap::line(2), Tap::first(2)};
  return cascade(peres, peres, w,
                 {Tap::first(0), Tap::second(0), Tap::second(1),
                  Tap::second(2)},
                 "PFAG", {"P", "Q", "R", "S"});
}

GateDef parse_gate_file(std::string_view text) {
  std::optional<std::string> name;
  std::size_t declared = 0;
  std::size_t header_line = 0;
  std::optional<std::vector<std::string>> inputs;
  std::vector<GateOutput> outputs;

  for (const auto& ln : detail::split_lines(text)) {
    detail::LineCursor cur(ln);
    if (cur.at_end()) continue;
    const std::size_t word_col = cur.column();
    const std::string word = cur.word();
    if (word == "gate") {
      if (name) cur.fail("duplicate 'gate' header", word_col);
      name = cur.identifier("gate name");
      declared = cur.number("line count");
      header_line = ln.number;
      cur.expect_end();
    } else if (!name) {
      cur.fail("expected 'gate <NAME> <lines>' header", word_col);
    } else if (word == "in") {
      if (inputs) cur.fail("duplicate 'in' declaration", word_col);
      inputs.emplace();
      while (!cur.at_end()) inputs->push_back(cur.identifier("input line"));
      if (inputs->empty()) cur.fail("'in' needs at least one line", word_col);
    } else if (word == "out") {
      if (!inputs) cur.fail("'out' before 'in'", word_col);
      std::string out_name = cur.identifier("output line");
      cur.expect('=');
      const std::size_t expr_col = cur.column();
      BoolExpr e = parse_expr(cur.rest(), ln.number, expr_col - 1);
      for (const auto& v : e.variables()) {
        if (std::find(inputs->begin(), inputs->end(), v) == inputs->end()) {
          throw ParseError("undeclared line '" + v + "' in output " + out_name,
                           ln.number, expr_col);
        }
      }
      outputs.push_back({std::move(out_name), std::move(e)});
    } else {
      cur.fail("unknown directive '" + word + "'", word_col);
    }
  }
  if (!name) throw ParseError("missing 'gate' header", 1, 1);
  if (!inputs) throw ParseError("missing 'in' declaration", header_line, 1);
  if (inputs->size() != declared || outputs.size() != declared) {
    throw ArityError("gate " + *name + " declares " +
                     std::to_string(declared) + " lines but has " +
                     std::to_string(inputs->size()) + " inputs and " +
                     std::to_string(outputs.size()) + " outputs");
  }
  return GateDef(std::move(*name), std::move(*inputs), std::move(outputs));
}

GateLibrary::GateLibrary() {
  for (const auto& n : builtin_names()) gates_.emplace(n, builtin(n));
}

void GateLibrary::add(GateDef gate) {
  std::string key = gate.name();
  gates_.insert_or_assign(std::move(key), std::move(gate));
}

bool GateLibrary::contains(std::string_view name) const {
  return gates_.find(name) != gates_.end();
}

const GateDef& GateLibrary::get(std::string_view name) const {
  auto it = gates_.find(name);
  if (it == gates_.end()) {
    throw LookupError("unknown gate '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::string> GateLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : gates_) out.push_back(k);
  return out;
}

}  // namespace revgate
