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

#include "revgate/synth.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "revgate/error.hpp"

namespace revgate {

TruthTable::TruthTable(unsigned arity, std::vector<std::uint8_t> values)
    : arity_(arity), values_(std::move(values)) {
  if (arity > kMaxPprmArity) {
    throw WidthError("function arity " + std::to_string(arity) +
                     " exceeds cap " + std::to_string(kMaxPprmArity));
  }
  if (values_.size() != (std::size_t{1} << arity)) {
    throw StructuralError("truth table of arity " + std::to_string(arity) +
                          " needs " + std::to_string(1u << arity) +
                          " entries");
  }
  for (auto& v : values_) {
    if (v > 1) throw StructuralError("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::from_hex(std::string_view hex, unsigned arity) {
  if (arity > kMaxPprmArity) {
    throw WidthError("function arity " + std::to_string(arity) +
                     " exceeds cap " + std::to_string(kMaxPprmArity));
  }
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::size_t bits = std::size_t{1} << arity;
  const std::size_t digits = (bits + 3) / 4;
  if (hex.size() != digits) {
    throw StructuralError("arity " + std::to_string(arity) + " needs " +
                          std::to_string(digits) + " hex digits, got " +
                          std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> values(bits, 0);
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[d];
    if (!std::isxdigit(static_cast<unsigned char>(c))) {
      throw StructuralError(std::string("invalid hex digit '") + c + "'");
    }
    const unsigned nibble = static_cast<unsigned>(
        std::isdigit(static_cast<unsigned char>(c))
            ? c - '0'
            : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    // Digit d covers bits [4*(digits-1-d), 4*(digits-d)).
    const std::size_t base = 4 * (digits - 1 - d);
    for (unsigned k = 0; k < 4; ++k) {
      if (!((nibble >> k) & 1u)) continue;
      if (base + k >= bits) {
        throw StructuralError("hex value has bits beyond 2^" +
                              std::to_string(arity) + " entries");
      }
      values[base + k] = 1;
    }
  }
  return TruthTable(arity, std::move(values));
}

TruthTable TruthTable::from_index(std::uint64_t index, unsigned arity) {
  if (arity > 5) throw WidthError("from_index supports arity <= 5");
  std::vector<std::uint8_t> values(std::size_t{1} << arity);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = static_cast<std::uint8_t>((index >> i) & 1u);
  }
  if (arity < 6 && (index >> values.size()) != 0) {
    throw StructuralError("function index out of range for arity");
  }
  return TruthTable(arity, std::move(values));
}

std::string TruthTable::to_hex() const {
  static const char* kDigits = "0123456789ABCDEF";
  const std::size_t digits = (values_.size() + 3) / 4;
  std::string s(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t base = 4 * (digits - 1 - d);
    unsigned nibble = 0;
    for (unsigned k = 0; k < 4 && base + k < values_.size(); ++k) {
      nibble |= static_cast<unsigned>(values_[base + k]) << k;
    }
    s[d] = kDigits[nibble];
  }
  return s;
}

std::string InputSource::to_string() const {
  switch (kind) {
    case Kind::Variable:
      return "x" + std::to_string(variable);
    case Kind::Complement:
      return "!x" + std::to_string(variable);
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
  }
  return "?";
}

std::string PFAGConfig::to_string() const {
  static const char* kOut = "PQRS";
  std::string s = "PFAG(";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) s += ", ";
    s += std::string(1, "ABCD"[i]) + "=" + inputs[i].to_string();
  }
  s += ") -> ";
  s += kOut[output];
  return s;
}

TruthTable realized_function(const std::array<InputSource, 4>& inputs,
                             unsigned output, unsigned arity) {
  const GateDef& pfag = builtin("PFAG");
  std::vector<std::uint8_t> values(std::size_t{1} << arity);
  for (std::uint32_t a = 0; a < values.size(); ++a) {
    std::uint32_t word = 0;
    for (const auto& src : inputs) {
      bool bit = false;
      switch (src.kind) {
        case InputSource::Kind::Variable:
          bit = (a >> (arity - 1 - src.variable)) & 1u;
          break;
        case InputSource::Kind::Complement:
          bit = !((a >> (arity - 1 - src.variable)) & 1u);
          break;
        case InputSource::Kind::Zero:
          bit = false;
          break;
        case InputSource::Kind::One:
          bit = true;
          break;
      }
      word = (word << 1) | (bit ? 1u : 0u);
    }
    values[a] = static_cast<std::uint8_t>(
        (pfag.apply(word) >> line_shift(4, output)) & 1u);
  }
  return TruthTable(arity, std::move(values));
}

std::optional<PFAGConfig> find_configuration(const TruthTable& target) {
  const unsigned arity = target.arity();
  if (arity > 2) {
    throw WidthError("configuration search supports at most 2 variables");
  }
  using Kind = InputSource::Kind;
  std::vector<InputSource> roles;
  for (unsigned v = 0; v < arity; ++v) roles.push_back({Kind::Variable, v});
  roles.push_back({Kind::Zero});
  roles.push_back({Kind::One});
  for (unsigned v = 0; v < arity; ++v) roles.push_back({Kind::Complement, v});

  // Passes in order of preference: each variable on at most one input; a
  // variable copied onto several inputs; complemented variables allowed.
  // The implications A->B and B->A need the last pass, since every other
  // single-gate output is either linear or monotone up to one XOR.
  const std::size_t r = roles.size();
  for (int pass = 0; pass < 3; ++pass) {
    for (std::size_t code = 0; code < r * r * r * r; ++code) {
      // Input A is the most significant digit, so A varies slowest.
      std::array<InputSource, 4> in;
      std::size_t rest = code;
      for (int k = 3; k >= 0; --k) {
        in[static_cast<std::size_t>(k)] = roles[rest % r];
        rest /= r;
      }
      bool repeated = false;
      bool complemented = false;
      for (const auto& src : in) {
        complemented |= src.kind == Kind::Complement;
      }
      for (unsigned v = 0; v < arity; ++v) {
        const auto uses = std::count_if(
            in.begin(), in.end(), [v](const InputSource& src) {
              return src.kind != Kind::Zero && src.kind != Kind::One &&
                     src.variable == v;
            });
        if (uses > 1) repeated = true;
      }
      const int needed = complemented ? 2 : repeated ? 1 : 0;
      if (needed != pass) continue;
      for (unsigned out = 0; out < 4; ++out) {
        TruthTable f = realized_function(in, out, arity);
        if (f == target) return PFAGConfig{in, out, std::move(f)};
      }
    }
  }
  return std::nullopt;
}

unsigned Monomial::degree() const {
  return static_cast<unsigned>(std::popcount(vars));
}

std::vector<unsigned> Monomial::variables() const {
  std::vector<unsigned> out;
  for (unsigned v = 0; v < 32; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (vars == 0) return "1";
  std::string s;
  for (unsigned v : variables()) s += "x" + std::to_string(v);
  return s;
}

std::vector<Monomial> pprm(const TruthTable& f) {
  const unsigned n = f.arity();
  std::vector<std::uint8_t> c = f.values();
  for (unsigned b = 0; b < n; ++b) {
    const std::size_t step = std::size_t{1} << b;
    for (std::size_t x = 0; x < c.size(); ++x) {
      if (x & step) c[x] ^= c[x ^ step];
    }
  }
  std::vector<Monomial> out;
  for (std::uint32_t m = 0; m < c.size(); ++m) {
    if (!c[m]) continue;
    // Index bit (n-1-v) is variable v.
    Monomial mono;
    for (unsigned v = 0; v < n; ++v) {
      if ((m >> (n - 1 - v)) & 1u) mono.vars |= 1u << v;
    }
    out.push_back(mono);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.vars < b.vars;
  });
  return out;
}

namespace {

// Line allocation for synthesize(). Every gate is a PFAG on four physical
// positions; names are assigned when the circuit is built.
class SynthPlan {
 public:
  explicit SynthPlan(unsigned arity) {
    for (unsigned v = 0; v < arity; ++v) {
      lines_.push_back({"x" + std::to_string(v), std::nullopt});
    }
    result_ = fresh_constant(false, "f0");
  }

  unsigned result() const { return result_; }

  unsigned fresh_constant(bool value, std::string name = {}) {
    if (name.empty()) name = "k" + std::to_string(constant_counter_++);
    lines_.push_back({std::move(name), value});
    return static_cast<unsigned>(lines_.size() - 1);
  }

  unsigned take_scratch() {
    if (scratch_.empty()) return fresh_constant(false);
    const unsigned s = scratch_.back();
    scratch_.pop_back();
    return s;
  }
  void give_scratch(unsigned pos) { scratch_.push_back(pos); }

  void pfag(unsigned a, unsigned b, unsigned c, unsigned d) {
    gates_.push_back({a, b, c, d});
  }

  Circuit build() const {
    std::vector<std::string> names;
    for (const auto& l : lines_) names.push_back(l.name);
    Circuit::Builder builder(names);
    for (unsigned i = 0; i < lines_.size(); ++i) {
      if (lines_[i].constant) builder.constant(lines_[i].name, *lines_[i].constant);
    }
    const GateDef& pfag = builtin("PFAG");
    unsigned counter = 0;
    for (std::size_t g = 0; g < gates_.size(); ++g) {
      std::vector<std::string> in;
      std::vector<std::string> out;
      const bool last_touch_of_result = [&] {
        for (std::size_t h = g + 1; h < gates_.size(); ++h) {
          if (std::find(gates_[h].begin(), gates_[h].end(), result_) !=
              gates_[h].end()) {
            return false;
          }
        }
        return true;
      }();
      for (unsigned pos : gates_[g]) {
        in.push_back(builder.current(pos));
        if (pos == result_ && last_touch_of_result) {
          out.push_back("f");
        } else {
          out.push_back("t" + std::to_string(counter++));
        }
      }
      builder.gate(pfag, in, out);
    }
    const std::string result_name = builder.current(result_);
    for (unsigned i = 0; i < lines_.size(); ++i) {
      if (i == result_) {
        builder.output(result_name);
      } else {
        builder.garbage(builder.current(i));
      }
    }
    return builder.build();
  }

 private:
  struct Line {
    std::string name;
    std::optional<bool> constant;
  };

  std::vector<Line> lines_;
  std::vector<std::array<unsigned, 4>> gates_;
  std::vector<unsigned> scratch_;
  unsigned result_ = 0;
  unsigned constant_counter_ = 0;
};

}  // namespace

Circuit synthesize(const TruthTable& f) {
  const unsigned n = f.arity();
  if (n > kMaxSynthArity) {
    throw WidthError("synthesis supports at most " +
                     std::to_string(kMaxSynthArity) + " variables");
  }
  std::vector<Monomial> terms = pprm(f);
  // Highest degree first: Toffoli-mode gates leave scratch lines that the
  // linear and constant terms can reuse.
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Monomial& a, const Monomial& b) {
                     return a.degree() > b.degree();
                   });

  SynthPlan plan(n);
  const unsigned res = plan.result();
  // Variable v always lives on position v between gates.
  auto needed_after = [&terms](std::size_t t, unsigned v) {
    for (std::size_t u = t + 1; u < terms.size(); ++u) {
      if (terms[u].contains(v)) return true;
    }
    return false;
  };

  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Monomial& m = terms[t];
    if (m.degree() == 0) {
      // Q = 1 ^ f.
      const unsigned one = plan.fresh_constant(true);
      const unsigned s1 = plan.take_scratch();
      const unsigned s2 = plan.take_scratch();
      plan.pfag(one, res, s1, s2);
      plan.give_scratch(s1);
      plan.give_scratch(s2);
      plan.give_scratch(one);
      continue;
    }
    if (m.degree() == 1) {
      // Q = x ^ f; A passes x through unchanged.
      const unsigned x = m.variables()[0];
      const unsigned s1 = plan.take_scratch();
      const unsigned s2 = plan.take_scratch();
      plan.pfag(x, res, s1, s2);
      plan.give_scratch(s1);
      plan.give_scratch(s2);
      continue;
    }
    // Chain of Toffoli-mode gates (C = 0 gives S = AB ^ D). The B operand is
    // overwritten with A ^ B, so variables still needed later go first (on A)
    // or are restored afterwards.
    std::vector<unsigned> vars = m.variables();
    std::stable_partition(vars.begin(), vars.end(), [&](unsigned v) {
      return needed_after(t, v);
    });
    unsigned acc = vars[0];
    for (std::size_t j = 1; j < vars.size(); ++j) {
      const unsigned b = vars[j];
      const bool last = j + 1 == vars.size();
      const unsigned target = last ? res : plan.fresh_constant(false);
      const unsigned zero = plan.fresh_constant(false);
      plan.pfag(acc, b, zero, target);
      // Now b holds acc^b and zero holds acc^b.
      if (needed_after(t, b)) {
        // Q = acc ^ (acc^b) = b; R and S become scratch.
        const unsigned s = plan.take_scratch();
        plan.pfag(acc, b, zero, s);
        plan.give_scratch(s);
      } else {
        plan.give_scratch(b);
      }
      plan.give_scratch(zero);
      if (acc >= n) plan.give_scratch(acc);  // spent partial product
      acc = target;
    }
  }
  return plan.build();
}

Circuit ripple_adder(unsigned bits) {
  if (bits < 1 || bits > kMaxAdderBits) {
    throw WidthError("ripple adder supports 1.." +
                     std::to_string(kMaxAdderBits) + " bits");
  }
  std::vector<std::string> lines{"c0"};
  for (unsigned i = 0; i < bits; ++i) {
    const auto k = std::to_string(i);
    lines.push_back("a" + k);
    lines.push_back("b" + k);
    lines.push_back("z" + k);
  }
  Circuit::Builder builder(lines);
  builder.constant("c0", false);
  for (unsigned i = 0; i < bits; ++i) {
    builder.constant("z" + std::to_string(i), false);
  }
  const GateDef& pfag = builtin("PFAG");
  for (unsigned i = 0; i < bits; ++i) {
    const auto k = std::to_string(i);
    builder.gate(pfag, {"a" + k, "b" + k, "c" + k, "z" + k},
                 {"ga" + k, "gb" + k, "s" + k, "c" + std::to_string(i + 1)});
    builder.garbage("ga" + k).garbage("gb" + k);
  }
  for (unsigned i = 0; i < bits; ++i) builder.output("s" + std::to_string(i));
  builder.output("c" + std::to_string(bits));
  return builder.build();
}

}  // namespace revgate
