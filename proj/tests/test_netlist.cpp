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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "revgate/error.hpp"
#include "revgate/netlist.hpp"

namespace revgate {
namespace {

constexpr const char* kPfagAdder = R"(
.lines  a b cin d0
.const  d0 = 0
.gate   PFAG (a b cin d0) -> (p q sum cout)
.garbage p q
.output  sum cout
)";

constexpr const char* kTwoPeresAdder = R"(
.lines  a b cin z
.const  z = 0
.gate   PERES (a b z) -> (p x g)
.gate   PERES (x cin g) -> (q sum cout)
.garbage p q
.output  sum cout
)";

TEST(ParseNetlist, PfagAdder) {
  const Circuit c = parse_netlist(kPfagAdder);
  EXPECT_EQ(c.width(), 4u);
  EXPECT_EQ(c.constants().size(), 1u);
  EXPECT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.garbage().size(), 2u);
  EXPECT_EQ(c.outputs(), (std::vector<std::string>{"sum", "cout"}));
  EXPECT_EQ(c.free_inputs(), (std::vector<std::string>{"a", "b", "cin"}));
}

TEST(ParseNetlist, EmptyGateListIsIdentity) {
  const Circuit c = parse_netlist(".lines x\n.output x\n");
  EXPECT_EQ(circuit_permutation(c).full, TruthPermutation::identity(1));
}

TEST(ParseNetlist, Errors) {
  EXPECT_THROW(parse_netlist(".lines a b\n.gate XYZ (a b) -> (c d)\n"
                             ".output c d\n"),
               ParseError);
  // Line arity mismatch.
  EXPECT_THROW(parse_netlist(".lines a b c\n.gate PERES (a b) -> (x y)\n"
                             ".output x y c\n"),
               ArityError);
  // Duplicate line binding.
  EXPECT_THROW(parse_netlist(".lines a b\n.const a = 0\n.const a = 1\n"
                             ".output a b\n"),
               StructuralError);
  EXPECT_THROW(parse_netlist(".lines a b\n.gate FEYNMAN (a a) -> (x y)\n"
                             ".output x y\n"),
               StructuralError);
  EXPECT_THROW(parse_netlist(".lines a b\n.gate FEYNMAN (a b) -> (x x)\n"
                             ".output x\n"),
               StructuralError);
  // Unclassified terminal line.
  EXPECT_THROW(parse_netlist(".lines a b\n.gate FEYNMAN (a b) -> (x y)\n"
                             ".output x\n"),
               StructuralError);
  // Classified twice.
  EXPECT_THROW(parse_netlist(".lines a b\n.output a b\n.garbage a\n"),
               StructuralError);
  EXPECT_THROW(parse_netlist(".gate FEYNMAN (a b) -> (x y)\n"), ParseError);
  EXPECT_THROW(parse_netlist(".lines a\n.bogus a\n"), ParseError);
  EXPECT_THROW(parse_netlist(".lines a\n.const a = 2\n.output a\n"),
               ParseError);
}

TEST(ParseNetlist, UnknownGateReportsLine) {
  try {
    parse_netlist(".lines a b\n\n.gate XYZ (a b) -> (c d)\n.output c d\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseNetlist, LoadedGatesResolve) {
  GateLibrary lib;
  lib.add(parse_gate_file("gate SW 2\nin A B\nout P = B\nout Q = A\n"));
  const Circuit c = parse_netlist(
      ".lines a b\n.gate SW (a b) -> (x y)\n.output x y\n", lib);
  EXPECT_EQ(simulate(c, 0b10).value(), 0b01u);
}

TEST(ParseNetlist, SerializationRoundTrip) {
  for (const char* text : {kPfagAdder, kTwoPeresAdder}) {
    const Circuit c = parse_netlist(text);
    const Circuit back = parse_netlist(c.to_netlist());
    EXPECT_EQ(circuit_permutation(back).full, circuit_permutation(c).full);
    EXPECT_EQ(back.outputs(), c.outputs());
    EXPECT_EQ(back.garbage(), c.garbage());
    EXPECT_EQ(back.constants(), c.constants());
  }
}

TEST(Simulate, PfagAdderExamples) {
  const Circuit c = parse_netlist(kPfagAdder);
  auto r = simulate(c, {{"a", true}, {"b", false}, {"cin", true}});
  EXPECT_FALSE(r.at("sum"));
  EXPECT_TRUE(r.at("cout"));
  r = simulate(c, {{"a", false}, {"b", false}, {"cin", false}});
  EXPECT_FALSE(r.at("sum"));
  EXPECT_FALSE(r.at("cout"));
}

TEST(Simulate, AssignmentMustCoverFreeInputsExactly) {
  const Circuit c = parse_netlist(kPfagAdder);
  EXPECT_THROW(simulate(c, {{"a", true}, {"b", false}}), StructuralError);
  EXPECT_THROW(simulate(c, {{"a", true}, {"b", false}, {"cin", true},
                            {"d0", false}}),
               StructuralError);
  EXPECT_THROW(simulate(c, {{"a", true}, {"b", false}, {"cin", true},
                            {"zz", false}}),
               StructuralError);
}

TEST(Simulate, FullAdderNetlistsMatchEquations) {
  for (const char* text : {kPfagAdder, kTwoPeresAdder}) {
    const Circuit c = parse_netlist(text);
    for (std::uint32_t abc = 0; abc < 8; ++abc) {
      const int a = (abc >> 2) & 1, b = (abc >> 1) & 1, cin = abc & 1;
      auto r = simulate(c, {{"a", a == 1}, {"b", b == 1}, {"cin", cin == 1}});
      EXPECT_EQ(r.at("sum"), (a ^ b ^ cin) == 1);
      EXPECT_EQ(r.at("cout"), (((a ^ b) & cin) ^ (a & b)) == 1);
    }
  }
}

TEST(CircuitPermutation, Examples) {
  const Circuit id = parse_netlist(".lines x y\n.output x y\n");
  EXPECT_EQ(circuit_permutation(id).full.map(),
            (std::vector<std::uint32_t>{0, 1, 2, 3}));
  const auto pf = circuit_permutation(parse_netlist(kPfagAdder));
  EXPECT_EQ(pf.full.size(), 16u);
  EXPECT_TRUE(is_bijective(pf.full.map()));
  EXPECT_EQ(pf.restricted.size(), 8u);
  EXPECT_EQ(circuit_permutation(parse_netlist(kTwoPeresAdder)).full, pf.full);
}

TEST(Audit, Adders) {
  const AuditReport one = audit(parse_netlist(kPfagAdder));
  EXPECT_EQ(one.constant_inputs, 1u);
  EXPECT_EQ(one.garbage_outputs, 2u);
  EXPECT_EQ(one.gate_count, 1u);
  EXPECT_EQ(one.quantum_cost.value, 8u);
  EXPECT_TRUE(one.reversible);
  EXPECT_TRUE(one.warnings.empty());

  const AuditReport two = audit(parse_netlist(kTwoPeresAdder));
  EXPECT_EQ(two.constant_inputs, 1u);
  EXPECT_EQ(two.garbage_outputs, 2u);
  EXPECT_EQ(two.gate_count, 2u);
  EXPECT_EQ(two.quantum_cost.value, 8u);
  EXPECT_TRUE(two.reversible);
}

TEST(Audit, WarnsOnUntouchedUsefulOutput) {
  const AuditReport r = audit(parse_netlist(
      ".lines a b c\n.gate FEYNMAN (a b) -> (x y)\n.output x y c\n"));
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("'c'"), std::string::npos);
}

TEST(Audit, UnknownGateCost) {
  GateLibrary lib;
  lib.add(parse_gate_file("gate SW 2\nin A B\nout P = B\nout Q = A\n"));
  const AuditReport r = audit(
      parse_netlist(".lines a b\n.gate SW (a b) -> (x y)\n.output x y\n", lib));
  EXPECT_FALSE(r.quantum_cost.known());
  EXPECT_EQ(r.quantum_cost.to_string(), "Unknown");
}

// Random circuits: the library's simulation must match direct evaluation of
// the reference gate functions, and the full-width map must be bijective.
TEST(RandomCircuits, BijectiveAndAgreeWithReference) {
  struct Kind {
    const char* name;
    unsigned width;
    oracle::GateFn fn;
  };
  const std::vector<Kind> kinds{
      {"FEYNMAN", 2, oracle::feynman}, {"TOFFOLI", 3, oracle::toffoli},
      {"FREDKIN", 3, oracle::fredkin}, {"PERES", 3, oracle::peres},
      {"PFAG", 4, oracle::pfag},       {"HNG", 4, oracle::hng}};
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned width = 4 + rng() % 9;  // 4..12
    const unsigned ngates = rng() % 9;     // 0..8
    std::vector<std::string> lines;
    for (unsigned i = 0; i < width; ++i) lines.push_back("l" + std::to_string(i));
    Circuit::Builder b(lines);
    struct Placed {
      const Kind* kind;
      std::vector<unsigned> pos;
    };
    std::vector<Placed> placed;
    unsigned fresh = 0;
    for (unsigned g = 0; g < ngates; ++g) {
      const Kind& k = kinds[rng() % kinds.size()];
      std::vector<unsigned> order(width);
      std::iota(order.begin(), order.end(), 0u);
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(k.width);
      std::vector<std::string> ins, outs;
      for (unsigned p : order) {
        ins.push_back(b.current(p));
        outs.push_back("w" + std::to_string(fresh++));
      }
      b.gate(builtin(k.name), ins, outs);
      placed.push_back({&k, order});
    }
    for (unsigned p = 0; p < width; ++p) b.output(b.current(p));
    const Circuit c = b.build();
    const auto tables = circuit_permutation(c);
    ASSERT_TRUE(is_bijective(tables.full.map())) << "trial " << trial;

    auto reference = [&](std::uint32_t in) {
      oracle::Bits v = oracle::unpack(in, width);
      for (const auto& pl : placed) {
        oracle::Bits sub;
        for (unsigned p : pl.pos) sub.push_back(v[p]);
        const oracle::Bits out = pl.kind->fn(sub);
        for (std::size_t k = 0; k < pl.pos.size(); ++k) v[pl.pos[k]] = out[k];
      }
      return oracle::pack(v);
    };
    // Exhaustive up to 8 lines, sampled above.
    const std::uint32_t size = 1u << width;
    const std::uint32_t samples = width <= 8 ? size : 64;
    for (std::uint32_t s = 0; s < samples; ++s) {
      const std::uint32_t in = width <= 8 ? s : rng() % size;
      ASSERT_EQ(tables.full(in), reference(in)) << "trial " << trial;
      if (width <= 8) {
        ASSERT_EQ(simulate(c, in).value(), tables.full(in));
      }
    }
  }
}

TEST(Width, CapEnforced) {
  std::vector<std::string> lines;
  for (unsigned i = 0; i <= kMaxWidth; ++i) lines.push_back("l" + std::to_string(i));
  std::string text = ".lines";
  for (const auto& l : lines) text += " " + l;
  text += "\n.output";
  for (const auto& l : lines) text += " " + l;
  text += "\n";
  EXPECT_THROW(circuit_permutation(parse_netlist(text)), WidthError);
}

}  // namespace
}  // namespace revgate
