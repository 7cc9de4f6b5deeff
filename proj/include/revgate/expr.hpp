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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace revgate {

/// Immutable Boolean expression tree over named lines. AND and XOR are
/// strictly binary; expressions are kept exactly as written (no
/// canonicalization), since operation counting depends on the written form.
class BoolExpr {
 public:
  enum class Kind { Var, Const, Not, And, Xor };

  static BoolExpr var(std::string name);
  static BoolExpr constant(bool value);

  friend BoolExpr operator!(const BoolExpr& e);
  friend BoolExpr operator&(const BoolExpr& a, const BoolExpr& b);
  friend BoolExpr operator^(const BoolExpr& a, const BoolExpr& b);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  bool value() const { return node_->value; }
  const BoolExpr& child() const { return node_->children[0]; }
  const BoolExpr& left() const { return node_->children[0]; }
  const BoolExpr& right() const { return node_->children[1]; }

  bool is_leaf() const {
    return kind() == Kind::Var || kind() == Kind::Const;
  }

  bool eval(const std::function<bool(const std::string&)>& lookup) const;

  /// Replaces every Var whose name is a key of `bindings`.
  BoolExpr substitute(const std::map<std::string, BoolExpr>& bindings) const;

  /// Names of all Var leaves, in first-occurrence order.
  std::vector<std::string> variables() const;

  /// Gate-file syntax: `^`, `&`, `!`, parentheses where needed.
  std::string to_string() const;

  friend bool operator==(const BoolExpr& a, const BoolExpr& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    bool value = false;
    std::vector<BoolExpr> children;
  };

  explicit BoolExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses an expression in gate-file syntax. `line` and `column_offset`
/// locate `text` within a larger file for error messages.
BoolExpr parse_expr(std::string_view text, std::size_t line = 1,
                    std::size_t column_offset = 0);

/// Evaluates an expression whose Var leaves have been resolved to indices.
/// Built once per gate so exhaustive tables do not repeat name lookups.
class CompiledExpr {
 public:
  CompiledExpr(const BoolExpr& expr, const std::vector<std::string>& inputs);

  /// `inputs` packs line 0 as the MSB, as in BitVector.
  bool eval(std::uint32_t inputs) const;

 private:
  enum class Op : std::uint8_t { Var, Const, Not, And, Xor };
  struct Step {
    Op op;
    std::uint8_t arg;  // shift for Var, value for Const
  };
  void emit(const BoolExpr& e, const std::vector<std::string>& inputs);

  std::vector<Step> program_;  // postfix
  std::size_t max_depth_ = 0;
};

}  // namespace revgate
