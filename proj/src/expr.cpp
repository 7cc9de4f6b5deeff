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

#include "revgate/expr.hpp"

#include <algorithm>
#include <cctype>

#include "revgate/error.hpp"

namespace revgate {

BoolExpr BoolExpr::var(std::string name) {
  return BoolExpr(std::make_shared<const Node>(
      Node{Kind::Var, std::move(name), false, {}}));
}

BoolExpr BoolExpr::constant(bool value) {
  return BoolExpr(
      std::make_shared<const Node>(Node{Kind::Const, {}, value, {}}));
}

BoolExpr operator!(const BoolExpr& e) {
  return BoolExpr(std::make_shared<const BoolExpr::Node>(
      BoolExpr::Node{BoolExpr::Kind::Not, {}, false, {e}}));
}

BoolExpr operator&(const BoolExpr& a, const BoolExpr& b) {
  return BoolExpr(std::make_shared<const BoolExpr::Node>(
      BoolExpr::Node{BoolExpr::Kind::And, {}, false, {a, b}}));
}

BoolExpr operator^(const BoolExpr& a, const BoolExpr& b) {
  return BoolExpr(std::make_shared<const BoolExpr::Node>(
      BoolExpr::Node{BoolExpr::Kind::Xor, {}, false, {a, b}}));
}

bool BoolExpr::eval(
    const std::function<bool(const std::string&)>& lookup) const {
  switch (kind()) {
    case Kind::Var:
      return lookup(name());
    case Kind::Const:
      return value();
    case Kind::Not:
      return !child().eval(lookup);
    case Kind::And:
      return left().eval(lookup) && right().eval(lookup);
    case Kind::Xor:
      return left().eval(lookup) != right().eval(lookup);
  }
  return false;
}

BoolExpr BoolExpr::substitute(
    const std::map<std::string, BoolExpr>& bindings) const {
  switch (kind()) {
    case Kind::Var: {
      auto it = bindings.find(name());
      return it == bindings.end() ? *this : it->second;
    }
    case Kind::Const:
      return *this;
    case Kind::Not:
      return !child().substitute(bindings);
    case Kind::And:
      return left().substitute(bindings) & right().substitute(bindings);
    case Kind::Xor:
      return left().substitute(bindings) ^ right().substitute(bindings);
  }
  return *this;
}

namespace {

void collect_vars(const BoolExpr& e, std::vector<std::string>& out) {
  switch (e.kind()) {
    case BoolExpr::Kind::Var:
      if (std::find(out.begin(), out.end(), e.name()) == out.end()) {
        out.push_back(e.name());
      }
      return;
    case BoolExpr::Kind::Const:
      return;
    case BoolExpr::Kind::Not:
      collect_vars(e.child(), out);
      return;
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Xor:
      collect_vars(e.left(), out);
      collect_vars(e.right(), out);
      return;
  }
}

// Binding strength: XOR < AND < NOT < leaf.
int precedence(const BoolExpr& e) {
  switch (e.kind()) {
    case BoolExpr::Kind::Xor:
      return 1;
    case BoolExpr::Kind::And:
      return 2;
    case BoolExpr::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

std::string render(const BoolExpr& e, int context) {
  std::string s;
  switch (e.kind()) {
    case BoolExpr::Kind::Var:
      return e.name();
    case BoolExpr::Kind::Const:
      return e.value() ? "1" : "0";
    case BoolExpr::Kind::Not:
      s = "!" + render(e.child(), 3);
      break;
    case BoolExpr::Kind::And:
      // Right operand gets a tighter context so that a right-nested tree
      // keeps its parentheses and re-parses to the same shape.
      s = render(e.left(), 2) + " & " + render(e.right(), 3);
      break;
    case BoolExpr::Kind::Xor:
      s = render(e.left(), 1) + " ^ " + render(e.right(), 2);
      break;
  }
  return precedence(e) < context ? "(" + s + ")" : s;
}

}  // namespace

std::vector<std::string> BoolExpr::variables() const {
  std::vector<std::string> out;
  collect_vars(*this, out);
  return out;
}

std::string BoolExpr::to_string() const { return render(*this, 0); }

bool operator==(const BoolExpr& a, const BoolExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case BoolExpr::Kind::Var:
      return a.name() == b.name();
    case BoolExpr::Kind::Const:
      return a.value() == b.value();
    case BoolExpr::Kind::Not:
      return a.child() == b.child();
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Xor:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t offset)
      : text_(text), line_(line), offset_(offset) {}

  BoolExpr parse() {
    BoolExpr e = parse_xor();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BoolExpr parse_xor() {
    BoolExpr e = parse_and();
    while (accept('^')) e = e ^ parse_and();
    return e;
  }

  BoolExpr parse_and() {
    BoolExpr e = parse_unary();
    while (accept('&')) e = e & parse_unary();
    return e;
  }

  BoolExpr parse_unary() {
    if (accept('!')) return !parse_unary();
    return parse_atom();
  }

  BoolExpr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an operand");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolExpr e = parse_xor();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        --pos_;
        fail("identifiers may not start with a digit");
      }
      return BoolExpr::constant(c == '1');
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return BoolExpr::var(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr parse_expr(std::string_view text, std::size_t line,
                    std::size_t column_offset) {
  return ExprParser(text, line, column_offset).parse();
}

CompiledExpr::CompiledExpr(const BoolExpr& expr,
                           const std::vector<std::string>& inputs) {
  emit(expr, inputs);
  std::size_t depth = 0;
  for (const Step& s : program_) {
    if (s.op == Op::Var || s.op == Op::Const) {
      max_depth_ = std::max(max_depth_, ++depth);
    } else if (s.op != Op::Not) {
      --depth;
    }
  }
}

void CompiledExpr::emit(const BoolExpr& e,
                        const std::vector<std::string>& inputs) {
  switch (e.kind()) {
    case BoolExpr::Kind::Var: {
      auto it = std::find(inputs.begin(), inputs.end(), e.name());
      if (it == inputs.end()) {
        throw StructuralError("expression references undeclared line '" +
                              e.name() + "'");
      }
      const auto index = static_cast<unsigned>(it - inputs.begin());
      const auto width = static_cast<unsigned>(inputs.size());
      program_.push_back({Op::Var, static_cast<std::uint8_t>(width - 1 - index)});
      return;
    }
    case BoolExpr::Kind::Const:
      program_.push_back({Op::Const, static_cast<std::uint8_t>(e.value())});
      return;
    case BoolExpr::Kind::Not:
      emit(e.child(), inputs);
      program_.push_back({Op::Not, 0});
      return;
    case BoolExpr::Kind::And:
    case BoolExpr::Kind::Xor:
      emit(e.left(), inputs);
      emit(e.right(), inputs);
      program_.push_back(
          {e.kind() == BoolExpr::Kind::And ? Op::And : Op::Xor, 0});
      return;
  }
}

bool CompiledExpr::eval(std::uint32_t inputs) const {
  bool small[64] = {};
  std::unique_ptr<bool[]> large;
  bool* stack = small;
  if (max_depth_ > 64) {
    large = std::make_unique<bool[]>(max_depth_);
    stack = large.get();
  }
  std::size_t top = 0;
  for (const Step& s : program_) {
    bool v = false;
    switch (s.op) {
      case Op::Var:
        v = (inputs >> s.arg) & 1u;
        break;
      case Op::Const:
        v = s.arg != 0;
        break;
      case Op::Not:
        stack[top - 1] = !stack[top - 1];
        continue;
      case Op::And:
        --top;
        stack[top - 1] = stack[top - 1] && stack[top];
        continue;
      case Op::Xor:
        --top;
        stack[top - 1] = stack[top - 1] != stack[top];
        continue;
    }
    stack[top++] = v;
  }
  return stack[0];
}

}  // namespace revgate
