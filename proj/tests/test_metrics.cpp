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

#include "revgate/error.hpp"
#include "revgate/expr.hpp"
#include "revgate/metrics.hpp"

namespace revgate {
namespace {

ComplexityVector ops(const GateDef& g, const ConstantBindings& b = {}) {
  auto v = count_ops(g, b);
  EXPECT_TRUE(v.has_value());
  return v.value_or(ComplexityVector{});
}

TEST(CountOps, BuiltinGates) {
  // Unbound PFAG also counts the XOR with D in S.
  EXPECT_EQ(ops(builtin("PFAG")), (ComplexityVector{6, 2, 0}));
  EXPECT_EQ(ops(builtin("PFAG"), {{"D", false}}), (ComplexityVector{5, 2, 0}));
  EXPECT_EQ(ops(builtin("HNG")), (ComplexityVector{5, 2, 0}));
  EXPECT_EQ(ops(builtin("PERES")), (ComplexityVector{2, 1, 0}));
  EXPECT_EQ(ops(builtin("FEYNMAN")), (ComplexityVector{1, 0, 0}));
  EXPECT_EQ(ops(builtin("TOFFOLI")), (ComplexityVector{1, 1, 0}));
  EXPECT_EQ(ops(builtin("FREDKIN")), (ComplexityVector{2, 4, 2}));
}

TEST(CountOps, PerOutputWithoutSharing) {
  // Q: 1 XOR; R: 2 XOR; S with D=0: 2 XOR and 2 AND.
  const auto& e = builtin("PFAG").expressions();
  const ConstantBindings d0{{"D", false}};
  EXPECT_EQ(count_ops(e[0], d0), (ComplexityVector{0, 0, 0}));
  EXPECT_EQ(count_ops(e[1], d0), (ComplexityVector{1, 0, 0}));
  EXPECT_EQ(count_ops(e[2], d0), (ComplexityVector{2, 0, 0}));
  EXPECT_EQ(count_ops(e[3], d0), (ComplexityVector{2, 2, 0}));
}

TEST(CountOps, IdentityGate) {
  const GateDef id("ID", {"A"}, {{"P", BoolExpr::var("A")}});
  EXPECT_EQ(ops(id), (ComplexityVector{0, 0, 0}));
  EXPECT_EQ(ops(id).formula(), "0");
}

TEST(CountOps, RenamingAndReorderingInvariant) {
  const GateDef renamed = parse_gate_file(
      "gate PF2 4\nin W X Y Z\n"
      "out S = ((W ^ X) & Y) ^ (W & X) ^ Z\n"
      "out R = W ^ X ^ Y\nout Q = W ^ X\nout P = W\n");
  EXPECT_EQ(ops(renamed), ops(builtin("PFAG")));
  EXPECT_EQ(ops(renamed, {{"Z", false}}), ops(builtin("PFAG"), {{"D", false}}));
}

TEST(CountOps, LowerBoundByNontrivialOutputs) {
  for (const auto& name : builtin_names()) {
    const GateDef& g = builtin(name);
    unsigned nontrivial = 0;
    for (const auto& e : g.expressions()) nontrivial += e.is_leaf() ? 0 : 1;
    EXPECT_GE(ops(g).total_ops(), nontrivial) << name;
  }
}

TEST(CountOps, TableOnlyGateNotComputable) {
  const GateDef t = GateDef::from_table("T2", {"A", "B"}, {"P", "Q"},
                                        TruthPermutation(2, {1, 0, 3, 2}));
  EXPECT_FALSE(count_ops(t).has_value());
  const ComplexityRow row = complexity_row(t, {}, CostRegistry());
  EXPECT_FALSE(row.ops);
  EXPECT_NE(row.note.find("not computable"), std::string::npos);
}

TEST(CountOps, UnknownBindingRejected) {
  EXPECT_THROW(count_ops(builtin("PERES"), {{"D", false}}), StructuralError);
}

TEST(FoldConstants, Rules) {
  const BoolExpr a = BoolExpr::var("A");
  const BoolExpr k = BoolExpr::var("K");
  EXPECT_EQ(fold_constants(a ^ k, {{"K", false}}), a);
  EXPECT_EQ(fold_constants(a ^ k, {{"K", true}}), !a);
  EXPECT_EQ(fold_constants(a & k, {{"K", true}}), a);
  EXPECT_EQ(fold_constants(a & k, {{"K", false}}), BoolExpr::constant(false));
  EXPECT_EQ(fold_constants(!k, {{"K", false}}), BoolExpr::constant(true));
}

TEST(Formula, Strings) {
  EXPECT_EQ((ComplexityVector{5, 2, 0}).formula(), "5α+2β");
  EXPECT_EQ((ComplexityVector{6, 3, 3}).formula(), "6α+3β+3δ");
  EXPECT_EQ((ComplexityVector{2, 1, 0}).formula(), "2α+β");
  EXPECT_EQ((ComplexityVector{0, 0, 1}).formula(), "δ");
}

TEST(Report, PfagAndHngRows) {
  const CostRegistry costs;
  const auto rows = complexity_report(
      {{&builtin("PFAG"), {{"D", false}}}, {&builtin("HNG"), {}}}, costs);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(*rows[0].ops, (ComplexityVector{5, 2, 0}));
  EXPECT_EQ(rows[0].ops->formula(), "5α+2β");
  EXPECT_EQ(rows[0].quantum_cost.to_string(), "8");
  EXPECT_EQ(*rows[1].ops, (ComplexityVector{5, 2, 0}));
  EXPECT_EQ(rows[1].quantum_cost.to_string(), "Unknown");
}

TEST(Report, ReferenceRows) {
  const ComplexityRow tsg = reference_row("TSG");
  EXPECT_TRUE(tsg.reference);
  EXPECT_EQ(*tsg.ops, (ComplexityVector{6, 3, 3}));
  EXPECT_EQ(tsg.ops->formula(), "6α+3β+3δ");
  EXPECT_EQ(tsg.quantum_cost.to_string(), "Unknown");
  EXPECT_FALSE(tsg.note.empty());
  EXPECT_EQ(*reference_row("MKG").ops, (ComplexityVector{5, 3, 3}));
  EXPECT_THROW(reference_row("PFAG"), LookupError);
}

TEST(Comparison, RowsAndFormats) {
  const auto rows = adder_gate_comparison(CostRegistry());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].name, "PFAG");
  EXPECT_FALSE(rows[0].reference);
  EXPECT_EQ(rows[1].name, "HNG");
  EXPECT_FALSE(rows[1].reference);
  EXPECT_EQ(rows[2].name, "MKG");
  EXPECT_TRUE(rows[2].reference);
  EXPECT_EQ(rows[3].name, "TSG");
  EXPECT_TRUE(rows[3].reference);
  EXPECT_EQ(to_csv(rows),
            "name,alpha,beta,delta,T,quantum_cost\n"
            "PFAG,5,2,0,5α+2β,8\n"
            "HNG,5,2,0,5α+2β,Unknown\n"
            "MKG,5,3,3,5α+3β+3δ,Unknown\n"
            "TSG,6,3,3,6α+3β+3δ,Unknown\n");
  const std::string table = to_table(rows);
  EXPECT_NE(table.find("PFAG  5      2     0      5α+2β"), std::string::npos)
      << table;
}

TEST(Comparison, SuppliedDefinitionReplacesReference) {
  // Any supplied gate named TSG is counted instead of the stored row.
  const GateDef tsg = parse_gate_file(
      "gate TSG 4\nin A B C D\nout P = A\nout Q = !B\n"
      "out R = C ^ A\nout S = D ^ (A & B)\n");
  const auto rows = adder_gate_comparison(CostRegistry(), {tsg});
  EXPECT_FALSE(rows[3].reference);
  EXPECT_EQ(*rows[3].ops, *count_ops(tsg));
  EXPECT_TRUE(rows[2].reference);
}

}  // namespace
}  // namespace revgate
