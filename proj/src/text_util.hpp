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

// Shared tokenizing helpers for the line-oriented file formats.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "revgate/error.hpp"

namespace revgate::detail {

struct SourceLine {
  std::size_t number;     // 1-based
  std::string_view text;  // comment stripped
};

inline std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view ln = text.substr(0, nl);
    if (const auto hash = ln.find('#'); hash != std::string_view::npos) {
      ln = ln.substr(0, hash);
    }
    if (!ln.empty() && ln.back() == '\r') ln.remove_suffix(1);
    out.push_back({number++, ln});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class LineCursor {
 public:
  explicit LineCursor(const SourceLine& line)
      : text_(line.text), line_(line.number) {
    skip_space();
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return pos_ + 1; }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw ParseError(message, line_, column);
  }
  [[noreturn]] void fail(const std::string& message) const {
    fail(message, column());
  }

  bool peek(char c) const { return !at_end() && text_[pos_] == c; }

  /// Any run of non-space characters other than punctuation used by the
  /// formats.
  std::string word() {
    const std::size_t start = pos_;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '=') {
      ++pos_;
    }
    if (start == pos_) fail("expected a word");
    std::string w(text_.substr(start, pos_ - start));
    skip_space();
    return w;
  }

  std::string identifier(const std::string& what) {
    if (at_end() || !is_ident_start(text_[pos_])) fail("expected " + what);
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    std::string w(text_.substr(start, pos_ - start));
    skip_space();
    return w;
  }

  std::size_t number(const std::string& what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected " + what);
    }
    std::size_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1'000'000) fail(what + " too large");
      ++pos_;
    }
    skip_space();
    return v;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip_space();
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    skip_space();
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

  std::string_view rest() {
    std::string_view r = text_.substr(pos_);
    pos_ = text_.size();
    return r;
  }

 private:
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace revgate::detail
