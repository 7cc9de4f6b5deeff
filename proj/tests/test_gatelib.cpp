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

#include <bit>

#include "oracles.hpp"
#include "revgate/error.hpp"
#include "revgate/expr.hpp"
#include "revgate/gate.hpp"

namespace revgate {
namespace {

struct Reference {
  const char* name;
  unsigned width;
  oracle::GateFn fn;
};

const std::vector<Reference>& references() {
  static const std::vector<Reference> refs{
      {"FEYNMAN", 2, oracle::feynman}, {"TOFFOLI", 3, oracle::toffoli},
      {"FREDKIN", 3, oracle::fredkin}, {"PERES", 3, oracle::peres},
      {"PFAG", 4, oracle::pfag},       {"HNG", 4, oracle::hng}};
  return refs;
}

TEST(Builtin, TablesMatchReferenceFunctions) {
  for (const auto& r : references()) {
    const GateDef& g = builtin(r.name);
    EXPECT_EQ(g.width(), r.width) << r.name;
    EXPECT_EQ(g.table().map(), oracle::table_of(r.fn, r.width)) << r.name;
  }
  EXPECT_EQ(builtin_names().size(), references().size());
}

TEST(Builtin, UnknownNameIsLookupError) {
  EXPECT_THROW(builtin("XYZ"), LookupError);
  EXPECT_THROW(builtin("TSG"), LookupError);
  EXPECT_THROW(builtin("MKG"), LookupError);
}

TEST(Builtin, PfagExamples) {
  const GateDef& g = builtin("PFAG");
  EXPECT_EQ(g.apply(BitVector(4, 0b1110)).to_string(), "1011");
  EXPECT_EQ(g.apply(BitVector(4, 0b0000)).to_string(), "0000");
}

TEST(Builtin, PeresPermutation) {
  EXPECT_EQ(builtin("PERES").table().map(),
            (std::vector<std::uint32_t>{0, 1, 2, 3, 6, 7, 5, 4}));
}

TEST(Builtin, SelfInverse) {
  for (const char* name : {"FEYNMAN", "TOFFOLI", "FREDKIN"}) {
    const auto& t = builtin(name).table();
    EXPECT_EQ(compose(t, t), TruthPermutation::identity(t.width())) << name;
  }
  const auto& p = builtin("PERES").table();
  EXPECT_NE(compose(p, p), TruthPermutation::identity(3));
}

TEST(Builtin, FredkinConservesHammingWeight) {
  const GateDef& g = builtin("FREDKIN");
  for (std::uint32_t i = 0; i < 8; ++i) {
    EXPECT_EQ(std::popcount(i), std::popcount(g.apply(i))) << i;
  }
}

TEST(Builtin, PfagFullAdderMode) {
  const GateDef& g = builtin("PFAG");
  for (std::uint32_t abc = 0; abc < 8; ++abc) {
    const int a = (abc >> 2) & 1, b = (abc >> 1) & 1, c = abc & 1;
    const BitVector out = g.apply(BitVector(4, abc << 1));
    EXPECT_EQ(out.bit(1), (a ^ b) == 1);              // half-adder sum
    EXPECT_EQ(out.bit(2), (a ^ b ^ c) == 1);          // sum
    EXPECT_EQ(out.bit(3), (((a ^ b) & c) ^ (a & b)) == 1);  // carry
  }
}

TEST(Builtin, HngAgreesWithPfagOnSumAndCarry) {
  const GateDef& p = builtin("PFAG");
  const GateDef& h = builtin("HNG");
  for (std::uint32_t i = 0; i < 16; ++i) {
    const BitVector a = p.apply(BitVector(4, i));
    const BitVector b = h.apply(BitVector(4, i));
    EXPECT_EQ(a.bit(2), b.bit(2));
    EXPECT_EQ(a.bit(3), b.bit(3));
  }
}

TEST(Cascade, TwoPeresIsPfag) {
  const GateDef c = pfag_from_peres_cascade();
  EXPECT_EQ(c.table(), builtin("PFAG").table());
  EXPECT_EQ(c.table().map(), oracle::table_of(oracle::pfag, 4));
}

TEST(Cascade, FeynmanTwiceIsIdentity) {
  const GateDef& f = builtin("FEYNMAN");
  Wiring w{{"A", "B"}, {0, 1}, {Tap::first(0), Tap::first(1)}};
  const GateDef c = cascade(f, f, w, {Tap::second(0), Tap::second(1)},
                            "ID2", {"X", "Y"});
  EXPECT_EQ(c.table(), TruthPermutation::identity(2));
}

TEST(Cascade, TwoPeresAdderProducesSumAndCarry) {
  // PERES(A, B, 0) then PERES(A^B, Cin, AB): lines (A, B, Cin, Z).
  const GateDef& p = builtin("PERES");
  Wiring w{{"A", "B", "Cin", "Z"}, {0, 1, 3},
           {Tap::first(1), Tap::line(2), Tap::first(2)}};
  const GateDef c = cascade(p, p, w,
                            {Tap::first(0), Tap::second(0), Tap::second(1),
                             Tap::second(2)},
                            "FA", {"G1", "G2", "Sum", "Cout"});
  for (std::uint32_t abc = 0; abc < 8; ++abc) {
    const int a = (abc >> 2) & 1, b = (abc >> 1) & 1, cin = abc & 1;
    const BitVector out = c.apply(BitVector(4, abc << 1));
    EXPECT_EQ(out.bit(2), (a ^ b ^ cin) == 1);
    EXPECT_EQ(out.bit(3), (((a ^ b) & cin) ^ (a & b)) == 1);
  }
}

TEST(Cascade, InconsistentWiringRejected) {
  const GateDef& p = builtin("PERES");
  // first.Q consumed twice, first.R never.
  Wiring w{{"A", "B", "C", "D"}, {0, 1, 3},
           {Tap::first(1), Tap::line(2), Tap::first(1)}};
  EXPECT_THROW(cascade(p, p, w,
                       {Tap::first(0), Tap::second(0), Tap::second(1),
                        Tap::second(2)},
                       "BAD", {"P", "Q", "R", "S"}),
               StructuralError);
  // Wrong port count for the first gate.
  Wiring short_w{{"A", "B", "C", "D"}, {0, 1},
                 {Tap::first(1), Tap::line(2), Tap::first(2)}};
  EXPECT_THROW(cascade(p, p, short_w,
                       {Tap::first(0), Tap::second(0), Tap::second(1),
                        Tap::second(2)},
                       "BAD", {"P", "Q", "R", "S"}),
               StructuralError);
}

TEST(GateDef, ArityAndBijectivityChecked) {
  auto A = BoolExpr::var("A");
  auto B = BoolExpr::var("B");
  EXPECT_THROW(GateDef("X", {"A", "B"}, {{"P", A}}), ArityError);
  try {
    GateDef("X", {"A", "B"}, {{"P", A}, {"Q", A}});
    FAIL() << "expected BijectivityError";
  } catch (const BijectivityError& e) {
    EXPECT_EQ(e.first(), 0b00u);
    EXPECT_EQ(e.second(), 0b01u);
  }
  EXPECT_NO_THROW(GateDef("X", {"A", "B"}, {{"P", B}, {"Q", A}}));
}

constexpr const char* kPeresText = R"(# a comment line
gate PERES 3
in  A B C
out P = A
out Q = A ^ B
out R = (A & B) ^ C   # trailing comment
)";

TEST(GateFile, ParsesPeres) {
  const GateDef g = parse_gate_file(kPeresText);
  EXPECT_EQ(g.name(), "PERES");
  EXPECT_EQ(g.table(), builtin("PERES").table());
  EXPECT_EQ(g.inputs(), (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(g.output_names(), (std::vector<std::string>{"P", "Q", "R"}));
}

TEST(GateFile, RoundTrip) {
  for (const auto& name : builtin_names()) {
    const GateDef& g = builtin(name);
    const GateDef back = parse_gate_file(g.to_gate_file());
    EXPECT_EQ(back.table(), g.table()) << name;
    ASSERT_EQ(back.expressions().size(), g.expressions().size());
    for (std::size_t i = 0; i < g.expressions().size(); ++i) {
      EXPECT_EQ(back.expressions()[i], g.expressions()[i]) << name;
    }
  }
}

TEST(GateFile, ArityMismatch) {
  EXPECT_THROW(parse_gate_file("gate X 3\nin A B C\nout P = A\nout Q = B\n"),
               ArityError);
}

TEST(GateFile, CollisionNamesWitnessInputs) {
  try {
    parse_gate_file("gate BAD 2\nin A B\nout P = A\nout Q = A\n");
    FAIL() << "expected BijectivityError";
  } catch (const BijectivityError& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("00"), std::string::npos) << msg;
    EXPECT_NE(msg.find("01"), std::string::npos) << msg;
  }
}

TEST(GateFile, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_gate_file("gate X 2\nin A B\nout P = A\nout Q = A ^ ^ B\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 13u);
  }
  try {
    parse_gate_file("gate X 2\nin A B\nout P = A\nout Q = A ^ Z\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_gate_file("in A B\n"), ParseError);
  EXPECT_THROW(parse_gate_file("gate X 2\nfoo A B\n"), ParseError);
  EXPECT_THROW(parse_gate_file("gate X 2\nin A B\nout P = (A\nout Q = B\n"),
               ParseError);
}

TEST(Expr, ParserPrecedence) {
  // XOR binds loosest, then AND, then NOT.
  const BoolExpr e = parse_expr("!A & B ^ C");
  ASSERT_EQ(e.kind(), BoolExpr::Kind::Xor);
  EXPECT_EQ(e.left().kind(), BoolExpr::Kind::And);
  EXPECT_EQ(e.left().left().kind(), BoolExpr::Kind::Not);
  // Left associative.
  const BoolExpr x = parse_expr("A ^ B ^ C");
  EXPECT_EQ(x.left().kind(), BoolExpr::Kind::Xor);
  EXPECT_EQ(x.right().kind(), BoolExpr::Kind::Var);
}

TEST(Expr, ToStringRoundTrip) {
  for (const char* text : {"A", "!A", "A ^ (B ^ C)", "(A ^ B) & C", "!(A & B)",
                           "A & B & C", "1 ^ A", "!!A"}) {
    const BoolExpr e = parse_expr(text);
    EXPECT_EQ(parse_expr(e.to_string()), e) << text << " -> " << e.to_string();
  }
}

TEST(Expr, EvalAgainstTruth) {
  const BoolExpr e = parse_expr("((A ^ B) & C) ^ (A & B) ^ D");
  CompiledExpr c(e, {"A", "B", "C", "D"});
  for (std::uint32_t i = 0; i < 16; ++i) {
    const auto b = oracle::unpack(i, 4);
    const int want = ((b[0] ^ b[1]) & b[2]) ^ (b[0] & b[1]) ^ b[3];
    EXPECT_EQ(c.eval(i), want == 1);
    EXPECT_EQ(e.eval([&](const std::string& n) { return b[n[0] - 'A'] == 1; }),
              want == 1);
  }
}

TEST(Expr, DeepExpressionsEvaluate) {
  // Right-nested chain deeper than the inline evaluation stack.
  BoolExpr e = BoolExpr::var("A");
  for (int i = 0; i < 200; ++i) e = BoolExpr::var("B") ^ e;
  CompiledExpr c(e, {"A", "B"});
  EXPECT_TRUE(c.eval(0b10));   // A=1, B=0
  EXPECT_TRUE(c.eval(0b11));   // 200 XORs of B cancel
  EXPECT_FALSE(c.eval(0b01));
}

TEST(Library, LoadedGatesResolve) {
  GateLibrary lib;
  EXPECT_TRUE(lib.contains("PFAG"));
  EXPECT_FALSE(lib.contains("SWAP2"));
  lib.add(parse_gate_file("gate SWAP2 2\nin A B\nout P = B\nout Q = A\n"));
  EXPECT_TRUE(lib.contains("SWAP2"));
  EXPECT_EQ(lib.get("SWAP2").apply(0b10), 0b01u);
  EXPECT_THROW(lib.get("NOPE"), LookupError);
}

}  // namespace
}  // namespace revgate
