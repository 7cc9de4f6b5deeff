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

#include <random>

#include "oracles.hpp"
#include "revgate/error.hpp"
#include "revgate/gate.hpp"
#include "revgate/netlist.hpp"
#include "revgate/qcost.hpp"

namespace revgate {
namespace {

oracle::Matrix to_oracle(const UnitaryMatrix& u) {
  oracle::Matrix m(u.dim(), std::vector<oracle::C>(u.dim()));
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) m[r][c] = u(r, c);
  return m;
}

// Independent product of the primitives' basis-state matrices.
oracle::Matrix reference_unitary(const PrimitiveSequence& seq) {
  oracle::Matrix m = oracle::identity(std::size_t{1} << seq.width());
  for (const auto& p : seq.steps()) {
    m = oracle::mul(oracle::primitive(static_cast<int>(p.kind), p.control,
                                      p.target, seq.width()),
                    m);
  }
  return m;
}

bool reference_verify(const PrimitiveSequence& seq, const GateDef& g) {
  return oracle::equal_up_to_phase(reference_unitary(seq),
                                   oracle::permutation(g.table().map()), 1e-9);
}

TEST(VAlgebra, SquareIsNotAndUnitary) {
  const UnitaryMatrix v = v_matrix();
  const UnitaryMatrix vd = v_dagger_matrix();
  EXPECT_LT((v * v).max_abs_diff(x_matrix()), 1e-12);
  EXPECT_LT((v * vd).max_abs_diff(UnitaryMatrix::identity(1)), 1e-12);
  EXPECT_LT((vd * v).max_abs_diff(UnitaryMatrix::identity(1)), 1e-12);
  EXPECT_LT(v.adjoint().max_abs_diff(vd), 1e-12);
  // Against the written-out matrix.
  const oracle::Mat2 ref = oracle::v2();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) EXPECT_LT(std::abs(v(r, c) - ref[r][c]), 1e-12);
}

TEST(UnitaryOf, Examples) {
  EXPECT_LT(unitary_of(PrimitiveSequence(3))
                .max_abs_diff(UnitaryMatrix::identity(3)),
            1e-12);
  const PrimitiveSequence cnot(2, {Primitive::cnot(0, 1)});
  EXPECT_TRUE(unitary_of(cnot).approx_equal(
      UnitaryMatrix::permutation(builtin("FEYNMAN").table()), 1e-12));
  const PrimitiveSequence vv(2, {Primitive::cv(0, 1), Primitive::cv(0, 1)});
  EXPECT_TRUE(unitary_of(vv).approx_equal(
      UnitaryMatrix::permutation(builtin("FEYNMAN").table()), 1e-12));
}

TEST(UnitaryOf, MatchesReferenceOnRandomSequences) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned width = 1 + rng() % 4;
    PrimitiveSequence seq(width);
    const unsigned len = rng() % 9;
    for (unsigned i = 0; i < len; ++i) {
      const int kind = width == 1 ? 0 : static_cast<int>(rng() % 4);
      const unsigned t = rng() % width;
      unsigned c = rng() % width;
      if (kind != 0) {
        while (c == t) c = rng() % width;
      }
      seq.push_back({static_cast<Primitive::Kind>(kind), kind ? c : 0, t});
    }
    EXPECT_LT(oracle::max_diff(to_oracle(unitary_of(seq)),
                               reference_unitary(seq)),
              1e-12)
        << seq.to_string();
    EXPECT_TRUE(unitary_of(seq).is_unitary(1e-9));
  }
}

TEST(UnitaryOf, AdjointCancels) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned width = 2 + rng() % 3;
    PrimitiveSequence seq(width);
    const unsigned len = rng() % 9;
    for (unsigned i = 0; i < len; ++i) {
      const int kind = static_cast<int>(rng() % 4);
      const unsigned t = rng() % width;
      unsigned c = (t + 1 + rng() % (width - 1)) % width;
      seq.push_back({static_cast<Primitive::Kind>(kind), kind ? c : 0, t});
    }
    PrimitiveSequence both = seq;
    both.append(seq.adjoint(), [&] {
      std::vector<unsigned> w(width);
      for (unsigned i = 0; i < width; ++i) w[i] = i;
      return w;
    }());
    EXPECT_TRUE(unitary_of(both).approx_equal(UnitaryMatrix::identity(width),
                                              1e-9))
        << seq.to_string();
  }
}

TEST(UnitaryOf, WidthCap) {
  EXPECT_THROW(unitary_of(PrimitiveSequence(kMaxUnitaryWidth + 1)),
               WidthError);
}

TEST(Primitive, Validation) {
  EXPECT_THROW(PrimitiveSequence(3, {Primitive::cnot(1, 1)}), StructuralError);
  EXPECT_THROW(PrimitiveSequence(3, {Primitive::cv(0, 3)}), StructuralError);
  EXPECT_THROW(PrimitiveSequence(3, {Primitive::not_gate(5)}),
               StructuralError);
}

TEST(Primitive, ParseAndPrint) {
  const PrimitiveSequence s =
      parse_sequence(3, "CV(1,2) CV(0,2), CNOT(0,1) CVDAG(1,2) NOT(0)");
  EXPECT_EQ(s.to_string(), "CV(1,2) CV(0,2) CNOT(0,1) CVDAG(1,2) NOT(0)");
  EXPECT_EQ(s.length(), 5u);
  EXPECT_THROW(parse_sequence(3, "CZ(0,1)"), ParseError);
  EXPECT_THROW(parse_sequence(3, "CNOT(0 1)"), ParseError);
}

TEST(Cost, MergesSameLinePairRunsUpToTwo) {
  EXPECT_EQ(PrimitiveSequence(3).cost(), 0u);
  EXPECT_EQ(parse_sequence(3, "CNOT(0,1) CV(1,2)").cost(), 2u);
  // Both orientations of one pair merge.
  EXPECT_EQ(parse_sequence(3, "CNOT(1,2) CV(2,1)").cost(), 1u);
  EXPECT_EQ(parse_sequence(3, "CV(1,2) CV(1,2) CV(1,2)").cost(), 2u);
  EXPECT_EQ(parse_sequence(3, "CV(1,2) CV(1,2) CV(1,2) CV(2,1)").cost(), 2u);
  // NOT never merges.
  EXPECT_EQ(parse_sequence(2, "NOT(0) NOT(0) CNOT(0,1)").cost(), 3u);
}

TEST(Decomposition, BuiltinsVerifyWithExpectedCosts) {
  const std::vector<std::pair<const char*, unsigned>> expected{
      {"FEYNMAN", 1}, {"PERES", 4}, {"TOFFOLI", 5}, {"FREDKIN", 5},
      {"PFAG", 8}};
  for (const auto& [name, cost] : expected) {
    const PrimitiveSequence s = decomposition(name);
    EXPECT_EQ(s.cost(), cost) << name;
    EXPECT_TRUE(verify(s, builtin(name))) << name;
    EXPECT_TRUE(reference_verify(s, builtin(name))) << name;
  }
  EXPECT_THROW(decomposition("HNG"), LookupError);
}

TEST(Decomposition, SequencesAsDocumented) {
  EXPECT_EQ(decomposition("PERES").to_string(),
            "CV(1,2) CV(0,2) CNOT(0,1) CVDAG(1,2)");
  EXPECT_EQ(decomposition("TOFFOLI").to_string(),
            "CV(1,2) CNOT(0,1) CVDAG(1,2) CNOT(0,1) CV(0,2)");
  // Pinned witness for the 3-line controlled swap.
  EXPECT_EQ(decomposition("FREDKIN").to_string(),
            "CNOT(0,1) CNOT(1,2) CV(2,1) CV(0,1) CNOT(0,2) CVDAG(2,1) "
            "CNOT(1,2)");
  EXPECT_EQ(decomposition("PFAG").length(), 8u);
}

TEST(Verify, NegativeAndTrivialCases) {
  PrimitiveSequence s = decomposition("PERES");
  PrimitiveSequence truncated(3, {s.steps().begin(), s.steps().end() - 1});
  EXPECT_FALSE(verify(truncated, builtin("PERES")));
  EXPECT_FALSE(reference_verify(truncated, builtin("PERES")));
  EXPECT_TRUE(verify(PrimitiveSequence(2), TruthPermutation::identity(2)));
  EXPECT_THROW(verify(s, builtin("PFAG")), StructuralError);
  // Peres is not Toffoli.
  EXPECT_FALSE(verify(s, builtin("TOFFOLI")));
}

TEST(Verify, IgnoresGlobalPhaseOnly) {
  UnitaryMatrix a = UnitaryMatrix::identity(2);
  UnitaryMatrix b = UnitaryMatrix::identity(2);
  const std::complex<double> phase(0, 1);
  for (std::size_t i = 0; i < 4; ++i) b(i, i) *= phase;
  EXPECT_TRUE(b.equal_up_to_phase(a, 1e-9));
  b(3, 3) = -b(3, 3);
  EXPECT_FALSE(b.equal_up_to_phase(a, 1e-9));
}

TEST(Registry, CostsAndDeclarations) {
  CostRegistry reg;
  EXPECT_EQ(reg.cost_of("PFAG").to_string(), "8");
  EXPECT_EQ(reg.cost_of("HNG").to_string(), "Unknown");
  reg.load("# published\ncost TSG = 13\n");
  EXPECT_EQ(reg.cost_of("TSG").to_string(), "13 (declared, unverified)");
  EXPECT_THROW(reg.load("price TSG = 13\n"), ParseError);
  EXPECT_THROW(reg.load("cost TSG 13\n"), ParseError);
}

TEST(QuantumCost, CircuitsSumGateCosts) {
  const Circuit single = parse_netlist(
      ".lines a b c d\n.const d = 0\n.gate PFAG (a b c d) -> (p q s co)\n"
      ".garbage p q\n.output s co\n");
  EXPECT_EQ(quantum_cost(single).value, 8u);
  const Circuit two = parse_netlist(
      ".lines a b c z\n.const z = 0\n.gate PERES (a b z) -> (p x g)\n"
      ".gate PERES (x c g) -> (q s co)\n.garbage p q\n.output s co\n");
  EXPECT_EQ(quantum_cost(two).value, 8u);
  EXPECT_EQ(*quantum_cost(two).value,
            2 * *CostRegistry().cost_of("PERES").value);
  GateLibrary lib;
  lib.add(parse_gate_file("gate SW 2\nin A B\nout P = B\nout Q = A\n"));
  const Circuit user =
      parse_netlist(".lines a b\n.gate SW (a b) -> (x y)\n.output x y\n", lib);
  EXPECT_FALSE(quantum_cost(user).known());
  CostRegistry reg;
  reg.declare("SW", 3);
  EXPECT_EQ(quantum_cost(user, reg).to_string(), "3 (declared, unverified)");
}

SearchOptions steps() { return {SearchMetric::Steps, false}; }
SearchOptions two_line() { return {SearchMetric::TwoLine, false}; }

TEST(Search, PeresStepsMinimumIsFour) {
  const auto& t = builtin("PERES").table();
  EXPECT_FALSE(search_min_sequence(t, 3, steps()));
  auto found = search_min_sequence(t, 4, steps());
  ASSERT_TRUE(found);
  EXPECT_EQ(found->length(), 4u);
  EXPECT_TRUE(verify(*found, builtin("PERES")));
  EXPECT_TRUE(reference_verify(*found, builtin("PERES")));
}

TEST(Search, TwoLineMinima) {
  struct Case {
    const char* name;
    unsigned cost;
  };
  for (const Case& c : {Case{"FEYNMAN", 1}, Case{"PERES", 4},
                        Case{"TOFFOLI", 5}, Case{"FREDKIN", 5}}) {
    const GateDef& g = builtin(c.name);
    EXPECT_FALSE(search_min_sequence(g.table(), c.cost - 1, two_line()))
        << c.name;
    auto found = search_min_sequence(g.table(), c.cost, two_line());
    ASSERT_TRUE(found) << c.name;
    EXPECT_EQ(found->cost(), c.cost) << c.name;
    EXPECT_LE(found->cost(), decomposition(c.name).cost()) << c.name;
    EXPECT_TRUE(reference_verify(*found, g)) << c.name;
  }
}

TEST(Search, FredkinNeedsMoreThanFiveSteps) {
  EXPECT_FALSE(search_min_sequence(builtin("FREDKIN").table(), 5, steps()));
}

TEST(Search, IdentityIsEmpty) {
  auto found = search_min_sequence(TruthPermutation::identity(3), 2, steps());
  ASSERT_TRUE(found);
  EXPECT_EQ(found->length(), 0u);
}

TEST(Search, NotPlacementsBehindFlag) {
  // Inverting line 0 needs a NOT; without the flag nothing short exists.
  std::vector<std::uint32_t> m(8);
  for (std::uint32_t i = 0; i < 8; ++i) m[i] = i ^ 4u;
  TruthPermutation t(3, m);
  EXPECT_FALSE(search_min_sequence(t, 2, steps()));
  auto found = search_min_sequence(t, 1, {SearchMetric::Steps, true});
  ASSERT_TRUE(found);
  EXPECT_EQ(found->to_string(), "NOT(0)");
  auto two = search_min_sequence(t, 1, {SearchMetric::TwoLine, true});
  ASSERT_TRUE(two);
  EXPECT_EQ(two->to_string(), "NOT(0)");
}

TEST(Search, StatsReported) {
  SearchStats st;
  search_min_sequence(builtin("PERES").table(), 3, steps(), &st);
  EXPECT_GT(st.distinct_unitaries, 1u);
  EXPECT_GT(st.expanded, 0u);
}

}  // namespace
}  // namespace revgate
