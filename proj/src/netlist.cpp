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

#include "revgate/netlist.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "revgate/error.hpp"
#include "text_util.hpp"

namespace revgate {

namespace {

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

Circuit::Builder::Builder(std::vector<std::string> lines)
    : lines_(std::move(lines)) {
  if (lines_.empty()) throw StructuralError("circuit needs at least one line");
  std::set<std::string> seen;
  for (const auto& l : lines_) {
    if (!seen.insert(l).second) {
      throw StructuralError("duplicate line binding '" + l + "'");
    }
  }
  current_ = lines_;
  used_names_ = lines_;
}

unsigned Circuit::Builder::position_of_current(std::string_view name) const {
  auto it = std::find(current_.begin(), current_.end(), name);
  if (it == current_.end()) {
    throw StructuralError("'" + std::string(name) +
                          "' is not a live line at this point");
  }
  return static_cast<unsigned>(it - current_.begin());
}

Circuit::Builder& Circuit::Builder::constant(std::string_view line,
                                             bool value) {
  auto it = std::find(lines_.begin(), lines_.end(), line);
  if (it == lines_.end()) {
    throw StructuralError("constant binding for undeclared line '" +
                          std::string(line) + "'");
  }
  const auto pos = static_cast<unsigned>(it - lines_.begin());
  if (!constants_.emplace(pos, value).second) {
    throw StructuralError("duplicate line binding: '" + std::string(line) +
                          "' already bound to a constant");
  }
  return *this;
}

Circuit::Builder& Circuit::Builder::gate(
    const GateDef& gate, const std::vector<std::string>& inputs,
    const std::vector<std::string>& outputs) {
  if (inputs.size() != gate.width() || outputs.size() != gate.width()) {
    throw ArityError("gate " + gate.name() + " takes " +
                     std::to_string(gate.width()) + " lines, got " +
                     std::to_string(inputs.size()) + " inputs and " +
                     std::to_string(outputs.size()) + " outputs");
  }
  GateInstance inst;
  inst.gate = std::make_shared<const GateDef>(gate);
  std::set<unsigned> touched;
  for (const auto& in : inputs) {
    const unsigned pos = position_of_current(in);
    if (!touched.insert(pos).second) {
      throw StructuralError("duplicate line binding: '" + in +
                            "' feeds gate " + gate.name() + " twice");
    }
    inst.positions.push_back(pos);
  }
  std::set<std::string> fresh;
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    const auto& out = outputs[k];
    if (out == inputs[k]) continue;
    if (contains(used_names_, out) || !fresh.insert(out).second) {
      throw StructuralError("duplicate line binding: output name '" + out +
                            "' is already in use");
    }
  }
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    current_[inst.positions[k]] = outputs[k];
    if (!contains(used_names_, outputs[k])) used_names_.push_back(outputs[k]);
  }
  inst.input_names = inputs;
  inst.output_names = outputs;
  gates_.push_back(std::move(inst));
  return *this;
}

Circuit::Builder& Circuit::Builder::garbage(std::string_view name) {
  garbage_.emplace_back(name);
  return *this;
}

Circuit::Builder& Circuit::Builder::output(std::string_view name) {
  outputs_.emplace_back(name);
  return *this;
}

Circuit Circuit::Builder::build() const {
  std::map<std::string, int> classified;
  for (const auto& g : garbage_) ++classified[g];
  for (const auto& o : outputs_) ++classified[o];
  for (const auto& [name, count] : classified) {
    if (!contains(current_, name)) {
      throw StructuralError("'" + name + "' is not a terminal line");
    }
    if (count > 1) {
      throw StructuralError("terminal line '" + name +
                            "' classified more than once");
    }
  }
  for (const auto& t : current_) {
    if (!classified.count(t)) {
      throw StructuralError("unclassified terminal line '" + t +
                            "': mark it .garbage or .output");
    }
  }
  Circuit c;
  c.lines_ = lines_;
  c.constants_ = constants_;
  c.gates_ = gates_;
  c.terminals_ = current_;
  c.garbage_ = garbage_;
  c.outputs_ = outputs_;
  return c;
}

std::vector<std::string> Circuit::free_inputs() const {
  std::vector<std::string> out;
  for (unsigned i = 0; i < lines_.size(); ++i) {
    if (!constants_.count(i)) out.push_back(lines_[i]);
  }
  return out;
}

unsigned Circuit::terminal_position(std::string_view name) const {
  auto it = std::find(terminals_.begin(), terminals_.end(), name);
  if (it == terminals_.end()) {
    throw LookupError("no terminal line '" + std::string(name) + "'");
  }
  return static_cast<unsigned>(it - terminals_.begin());
}

unsigned Circuit::line_position(std::string_view name) const {
  auto it = std::find(lines_.begin(), lines_.end(), name);
  if (it == lines_.end()) {
    throw LookupError("no input line '" + std::string(name) + "'");
  }
  return static_cast<unsigned>(it - lines_.begin());
}

std::uint32_t Circuit::evaluate(std::uint32_t full_input) const {
  const unsigned n = width();
  if (n > 32) {
    throw WidthError("packed evaluation supports at most 32 lines, circuit has " +
                     std::to_string(n));
  }
  std::uint32_t state = full_input;
  for (const auto& inst : gates_) {
    const unsigned k = inst.gate->width();
    std::uint32_t port_in = 0;
    for (unsigned p = 0; p < k; ++p) {
      port_in = (port_in << 1) |
                ((state >> line_shift(n, inst.positions[p])) & 1u);
    }
    const std::uint32_t port_out = inst.gate->apply(port_in);
    for (unsigned p = 0; p < k; ++p) {
      const std::uint32_t mask = std::uint32_t{1}
                                 << line_shift(n, inst.positions[p]);
      if ((port_out >> line_shift(k, p)) & 1u) {
        state |= mask;
      } else {
        state &= ~mask;
      }
    }
  }
  return state;
}

std::vector<bool> Circuit::evaluate_lines(std::vector<bool> lines) const {
  if (lines.size() != width()) {
    throw StructuralError("expected " + std::to_string(width()) +
                          " line values, got " + std::to_string(lines.size()));
  }
  for (const auto& inst : gates_) {
    const unsigned k = inst.gate->width();
    std::uint32_t port_in = 0;
    for (unsigned p = 0; p < k; ++p) {
      port_in = (port_in << 1) | (lines[inst.positions[p]] ? 1u : 0u);
    }
    const std::uint32_t port_out = inst.gate->apply(port_in);
    for (unsigned p = 0; p < k; ++p) {
      lines[inst.positions[p]] = (port_out >> line_shift(k, p)) & 1u;
    }
  }
  return lines;
}

std::vector<bool> Circuit::embed_lines(std::uint32_t free_assignment) const {
  const unsigned n = width();
  const unsigned free_count = n - static_cast<unsigned>(constants_.size());
  if (free_count > 32) {
    throw WidthError("at most 32 free inputs can be packed, circuit has " +
                     std::to_string(free_count));
  }
  if (free_count < 32 && free_assignment >= (std::uint32_t{1} << free_count)) {
    throw StructuralError("assignment has more bits than the " +
                          std::to_string(free_count) + " free inputs");
  }
  std::vector<bool> lines(n);
  unsigned free_index = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (auto it = constants_.find(i); it != constants_.end()) {
      lines[i] = it->second;
    } else {
      lines[i] = (free_assignment >> (free_count - 1 - free_index)) & 1u;
      ++free_index;
    }
  }
  return lines;
}

std::uint32_t Circuit::embed(std::uint32_t free_assignment) const {
  const unsigned n = width();
  const unsigned free_count = n - static_cast<unsigned>(constants_.size());
  if (n > 32) {
    throw WidthError("packed embedding supports at most 32 lines, circuit has " +
                     std::to_string(n));
  }
  if (free_count < 32 && free_assignment >= (std::uint32_t{1} << free_count)) {
    throw StructuralError("assignment has more bits than the " +
                          std::to_string(free_count) + " free inputs");
  }
  std::uint32_t word = 0;
  unsigned free_index = 0;
  for (unsigned i = 0; i < n; ++i) {
    bool bit;
    if (auto it = constants_.find(i); it != constants_.end()) {
      bit = it->second;
    } else {
      bit = (free_assignment >> (free_count - 1 - free_index)) & 1u;
      ++free_index;
    }
    word = (word << 1) | (bit ? 1u : 0u);
  }
  return word;
}

std::string Circuit::to_netlist() const {
  std::ostringstream os;
  os << ".lines";
  for (const auto& l : lines_) os << ' ' << l;
  os << '\n';
  for (const auto& [pos, value] : constants_) {
    os << ".const " << lines_[pos] << " = " << (value ? 1 : 0) << '\n';
  }
  for (const auto& g : gates_) {
    os << ".gate " << g.gate->name() << " (";
    for (std::size_t i = 0; i < g.input_names.size(); ++i) {
      os << (i ? " " : "") << g.input_names[i];
    }
    os << ") -> (";
    for (std::size_t i = 0; i < g.output_names.size(); ++i) {
      os << (i ? " " : "") << g.output_names[i];
    }
    os << ")\n";
  }
  if (!garbage_.empty()) {
    os << ".garbage";
    for (const auto& g : garbage_) os << ' ' << g;
    os << '\n';
  }
  if (!outputs_.empty()) {
    os << ".output";
    for (const auto& o : outputs_) os << ' ' << o;
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::string> name_list(detail::LineCursor& cur,
                                   const std::string& what) {
  std::vector<std::string> names;
  cur.expect('(');
  while (!cur.peek(')')) {
    if (cur.at_end()) cur.fail("expected ')'");
    names.push_back(cur.identifier(what));
  }
  cur.expect(')');
  return names;
}

}  // namespace

Circuit parse_netlist(std::string_view text, const GateLibrary& library) {
  std::optional<Circuit::Builder> builder;
  for (const auto& ln : detail::split_lines(text)) {
    detail::LineCursor cur(ln);
    if (cur.at_end()) continue;
    const std::size_t col = cur.column();
    const std::string directive = cur.word();
    // Builder errors carry no position; re-raise them at this line.
    try {
      if (directive == ".lines") {
        if (builder) cur.fail("duplicate .lines directive", col);
        std::vector<std::string> lines;
        while (!cur.at_end()) lines.push_back(cur.identifier("line name"));
        if (lines.empty()) cur.fail(".lines needs at least one line", col);
        builder.emplace(std::move(lines));
        continue;
      }
      if (!builder) cur.fail("expected .lines before " + directive, col);
      if (directive == ".const") {
        do {
          const std::string line = cur.identifier("line name");
          cur.expect('=');
          const std::size_t vcol = cur.column();
          const std::size_t v = cur.number("constant value");
          if (v > 1) cur.fail("constant must be 0 or 1", vcol);
          builder->constant(line, v == 1);
        } while (!cur.at_end() && cur.accept(','));
        cur.expect_end();
      } else if (directive == ".gate") {
        const std::size_t gcol = cur.column();
        const std::string name = cur.identifier("gate name");
        if (!library.contains(name)) {
          throw ParseError("unknown gate '" + name + "'", ln.number, gcol);
        }
        auto inputs = name_list(cur, "input line");
        cur.expect('-');
        cur.expect('>');
        auto outputs = name_list(cur, "output line");
        cur.expect_end();
        builder->gate(library.get(name), inputs, outputs);
      } else if (directive == ".garbage") {
        while (!cur.at_end()) builder->garbage(cur.identifier("line name"));
      } else if (directive == ".output") {
        while (!cur.at_end()) builder->output(cur.identifier("line name"));
      } else {
        cur.fail("unknown directive '" + directive + "'", col);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const ArityError& e) {
      throw ArityError("line " + std::to_string(ln.number) + ": " + e.what());
    } catch (const StructuralError& e) {
      throw StructuralError("line " + std::to_string(ln.number) + ": " +
                            e.what());
    }
  }
  if (!builder) throw ParseError("missing .lines directive", 1, 1);
  return builder->build();
}

std::map<std::string, bool> simulate(
    const Circuit& circuit, const std::map<std::string, bool>& assignment) {
  const auto free = circuit.free_inputs();
  for (const auto& [name, value] : assignment) {
    if (!contains(free, name)) {
      throw StructuralError(
          contains(circuit.lines(), name)
              ? "'" + name + "' is a constant input and cannot be assigned"
              : "'" + name + "' is not an input line");
    }
  }
  std::vector<bool> lines(circuit.width());
  for (unsigned i = 0; i < circuit.width(); ++i) {
    if (auto c = circuit.constants().find(i); c != circuit.constants().end()) {
      lines[i] = c->second;
      continue;
    }
    auto it = assignment.find(circuit.lines()[i]);
    if (it == assignment.end()) {
      throw StructuralError("missing value for input '" + circuit.lines()[i] +
                            "'");
    }
    lines[i] = it->second;
  }
  lines = circuit.evaluate_lines(std::move(lines));
  std::map<std::string, bool> result;
  for (unsigned i = 0; i < circuit.width(); ++i) {
    result[circuit.terminals()[i]] = lines[i];
  }
  return result;
}

BitVector simulate(const Circuit& circuit, std::uint32_t free_assignment) {
  return BitVector(circuit.width(),
                   circuit.evaluate(circuit.embed(free_assignment)));
}

std::vector<bool> simulate_lines(const Circuit& circuit,
                                 std::uint32_t free_assignment) {
  return circuit.evaluate_lines(circuit.embed_lines(free_assignment));
}

CircuitTables circuit_permutation(const Circuit& circuit) {
  const unsigned n = circuit.width();
  check_width(n);
  std::vector<std::uint32_t> full(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < full.size(); ++i) full[i] = circuit.evaluate(i);
  const unsigned free_count =
      n - static_cast<unsigned>(circuit.constants().size());
  std::vector<std::uint32_t> restricted(std::size_t{1} << free_count);
  for (std::uint32_t a = 0; a < restricted.size(); ++a) {
    restricted[a] = full[circuit.embed(a)];
  }
  return {TruthPermutation(n, std::move(full)), std::move(restricted)};
}

AuditReport audit(const Circuit& circuit, const CostRegistry& costs) {
  AuditReport r;
  r.width = circuit.width();
  r.gate_count = static_cast<unsigned>(circuit.gates().size());
  r.constant_inputs = static_cast<unsigned>(circuit.constants().size());
  r.garbage_outputs = static_cast<unsigned>(circuit.garbage().size());
  r.quantum_cost = quantum_cost(circuit, costs);
  if (circuit.width() <= kMaxWidth) {
    r.reversible = is_bijective(circuit_permutation(circuit).full.map());
  } else {
    // Too wide to enumerate; gate-by-gate bijectivity is structural.
    r.reversible = true;
    r.warnings.push_back("width " + std::to_string(circuit.width()) +
                         " exceeds exhaustive cap; reversibility follows "
                         "from per-gate bijectivity only");
  }
  for (const auto& o : circuit.outputs()) {
    if (contains(circuit.lines(), o)) {
      const unsigned pos = circuit.line_position(o);
      const bool touched = std::any_of(
          circuit.gates().begin(), circuit.gates().end(),
          [pos](const GateInstance& g) {
            return std::find(g.positions.begin(), g.positions.end(), pos) !=
                   g.positions.end();
          });
      if (!touched) {
        r.warnings.push_back("useful output '" + o +
                             "' is never consumed by any gate");
      }
    }
  }
  return r;
}

}  // namespace revgate
